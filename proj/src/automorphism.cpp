#include "egr/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "egr/errors.hpp"

namespace egr {

namespace {

void check_bijection(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n)
    throw ParameterError("permutation has wrong length");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw ParameterError("not a bijection on the vertex set");
    seen[v] = 1;
  }
}

// Small bitset over the vertex range.
struct VSet {
  std::vector<std::uint64_t> w;

  explicit VSet(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i / 64] |= 1ULL << (i % 64); }
  void reset(int i) { w[i / 64] &= ~(1ULL << (i % 64)); }
  bool test(int i) const { return w[i / 64] >> (i % 64) & 1; }
  void and_with(const VSet& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  void andnot_with(const VSet& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(static_cast<int>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

// Per-vertex invariant: degree plus sorted BFS layer sizes. Cheap and
// already separates most non-equivalent vertices.
std::vector<std::vector<int>> layer_profiles(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> prof(n);
  std::vector<int> dist(n), queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    int maxd = 0;
    while (head < tail) {
      const int x = queue[head++];
      maxd = std::max(maxd, dist[x]);
      for (int w2 : g.neighbors(x))
        if (dist[w2] < 0) {
          dist[w2] = dist[x] + 1;
          queue[tail++] = w2;
        }
    }
    std::vector<int> sizes(maxd + 2, 0);
    for (int v = 0; v < n; ++v)
      if (dist[v] >= 0) ++sizes[dist[v]];
    sizes[maxd + 1] = tail;  // reachable count, distinguishes components
    prof[s] = std::move(sizes);
  }
  return prof;
}

// Joint iterated neighborhood refinement of two graphs; colors are
// comparable across them.
void joint_refine(const Graph& a, const Graph& b, std::vector<int>& ca,
                  std::vector<int>& cb) {
  const int na = a.order(), nb = b.order();
  const auto pa = layer_profiles(a), pb = layer_profiles(b);

  auto renumber = [&](const std::vector<std::vector<int>>& sa,
                      const std::vector<std::vector<int>>& sb) {
    std::vector<std::vector<int>> pool = sa;
    pool.insert(pool.end(), sb.begin(), sb.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    auto idx = [&](const std::vector<int>& s) {
      return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), s) -
                              pool.begin());
    };
    for (int v = 0; v < na; ++v) ca[v] = idx(sa[v]);
    for (int v = 0; v < nb; ++v) cb[v] = idx(sb[v]);
    return static_cast<int>(pool.size());
  };

  std::vector<std::vector<int>> sa(na), sb(nb);
  for (int v = 0; v < na; ++v) sa[v] = pa[v];
  for (int v = 0; v < nb; ++v) sb[v] = pb[v];
  int classes = renumber(sa, sb);

  for (;;) {
    for (int v = 0; v < na; ++v) {
      auto& s = sa[v];
      s.assign(1, ca[v]);
      for (int w : a.neighbors(v)) s.push_back(ca[w]);
      std::sort(s.begin() + 1, s.end());
    }
    for (int v = 0; v < nb; ++v) {
      auto& s = sb[v];
      s.assign(1, cb[v]);
      for (int w : b.neighbors(v)) s.push_back(cb[w]);
      std::sort(s.begin() + 1, s.end());
    }
    const int next = renumber(sa, sb);
    if (next == classes) return;
    classes = next;
  }
}

struct MapSearch {
  const Graph& a;
  const Graph& b;
  int n;
  bool count_all;
  std::vector<VSet> arows, brows;
  std::vector<int> mapping;
  std::int64_t found = 0;
  bool stop = false;

  MapSearch(const Graph& a_, const Graph& b_, bool count_all_)
      : a(a_), b(b_), n(a_.order()), count_all(count_all_),
        mapping(n, -1) {
    arows.assign(n, VSet(n));
    brows.assign(n, VSet(n));
    for (auto [u, v] : a.edge_list()) {
      arows[u].set(v);
      arows[v].set(u);
    }
    for (auto [u, v] : b.edge_list()) {
      brows[u].set(v);
      brows[v].set(u);
    }
  }

  void recurse(const std::vector<VSet>& cand, int depth) {
    if (depth == n) {
      ++found;
      if (!count_all) stop = true;
      return;
    }
    // most-constrained vertex first
    int v = -1, bestc = std::numeric_limits<int>::max();
    for (int i = 0; i < n; ++i) {
      if (mapping[i] >= 0) continue;
      const int c = cand[i].count();
      if (c < bestc) {
        bestc = c;
        v = i;
      }
    }
    if (bestc == 0) return;

    std::vector<int> targets;
    targets.reserve(bestc);
    cand[v].for_each([&](int u) { targets.push_back(u); });
    for (int u : targets) {
      mapping[v] = u;
      std::vector<VSet> next = cand;
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        if (mapping[w] >= 0 || w == v) continue;
        next[w].reset(u);
        if (arows[v].test(w))
          next[w].and_with(brows[u]);
        else
          next[w].andnot_with(brows[u]);
        ok = !next[w].empty();
      }
      if (ok) recurse(next, depth + 1);
      mapping[v] = -1;
      if (stop) return;
    }
  }

  // Returns the number of color-respecting edge-preserving bijections
  // (all of them, or stops at one when !count_all).
  std::int64_t run() {
    if (n == 0) return 1;
    std::vector<int> ca(n), cb(b.order());
    joint_refine(a, b, ca, cb);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return 0;  // color histograms differ: no bijection

    std::vector<VSet> cand(n, VSet(n));
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (ca[v] == cb[u]) cand[v].set(u);
    recurse(cand, 0);
    return found;
  }
};

}  // namespace

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  check_bijection(n, perm);
  std::vector<int> image;
  for (int v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    image.assign(nb.begin(), nb.end());
    for (int& x : image) x = perm[x];
    std::sort(image.begin(), image.end());
    const auto target = g.neighbors(perm[v]);
    if (!std::equal(image.begin(), image.end(), target.begin(), target.end()))
      return false;
  }
  return true;
}

std::vector<std::vector<int>> vertex_orbits(
    int n, const std::vector<std::vector<int>>& gens) {
  for (const auto& gen : gens) check_bijection(n, gen);
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& gen : gens)
    for (int v = 0; v < n; ++v) {
      const int a = find(v), b = find(gen[v]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(v);
  }
  return orbits;
}

std::int64_t automorphism_group_order(const Graph& g, int max_order) {
  if (g.order() > max_order)
    throw ResourceError("automorphism search refused for order " +
                        std::to_string(g.order()) + " > " +
                        std::to_string(max_order));
  MapSearch search(g, g, /*count_all=*/true);
  return search.run();
}

bool are_isomorphic(const Graph& g1, const Graph& g2, int max_order) {
  if (g1.order() > max_order || g2.order() > max_order)
    throw ResourceError("isomorphism search refused above order " +
                        std::to_string(max_order));
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
    return false;
  MapSearch search(g1, g2, /*count_all=*/false);
  return search.run() > 0;
}

}  // namespace egr
