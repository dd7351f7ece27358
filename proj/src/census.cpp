#include "egr/census.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <thread>

#include "egr/errors.hpp"

namespace egr {

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n), queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int x = queue[head++];
      if (2 * dist[x] + 1 >= best) break;  // no shorter closure possible
      for (int w : g.neighbors(x)) {
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          queue[tail++] = w;
        } else if (w != parent[x]) {
          best = std::min(best, dist[x] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

// Flat adjacency bitmatrix for O(1) edge tests in the census inner loop.
struct AdjBits {
  int words;
  std::vector<std::uint64_t> bits;

  explicit AdjBits(const Graph& g)
      : words((g.order() + 63) / 64),
        bits(static_cast<size_t>(g.order()) * words, 0) {
    for (auto [u, v] : g.edge_list()) {
      bits[static_cast<size_t>(u) * words + v / 64] |= 1ULL << (v % 64);
      bits[static_cast<size_t>(v) * words + u / 64] |= 1ULL << (u % 64);
    }
  }
  bool test(int u, int v) const {
    return bits[static_cast<size_t>(u) * words + v / 64] >> (v % 64) & 1;
  }
};

// Counts simple paths from v back to u of length exactly k-1; each such path
// closes the edge {u,v} into one k-cycle.
struct EdgeCounter {
  const Graph& g;
  const AdjBits& adj;
  int k;
  std::vector<int> dist;  // BFS distance from the current target u
  std::vector<char> visited;
  std::vector<int> queue;
  int target = -1;

  EdgeCounter(const Graph& g_, const AdjBits& adj_, int k_)
      : g(g_), adj(adj_), k(k_), dist(g_.order()), visited(g_.order()),
        queue(g_.order()) {}

  std::int64_t count(int u, int v) {
    target = u;
    std::fill(dist.begin(), dist.end(), std::numeric_limits<int>::max());
    dist[u] = 0;
    int head = 0, tail = 0;
    queue[tail++] = u;
    while (head < tail) {
      const int x = queue[head++];
      if (dist[x] >= k - 1) break;
      for (int w : g.neighbors(x))
        if (dist[w] == std::numeric_limits<int>::max()) {
          dist[w] = dist[x] + 1;
          queue[tail++] = w;
        }
    }
    std::fill(visited.begin(), visited.end(), 0);
    visited[v] = 1;
    return paths(v, k - 1);
  }

  std::int64_t paths(int x, int remaining) {
    if (remaining == 1) return adj.test(x, target) ? 1 : 0;
    std::int64_t total = 0;
    for (int w : g.neighbors(x)) {
      if (w == target || visited[w] || dist[w] > remaining - 1) continue;
      visited[w] = 1;
      total += paths(w, remaining - 1);
      visited[w] = 0;
    }
    return total;
  }
};

void check_cycle_length(int k) {
  if (k < 3) throw ParameterError("cycle length must be at least 3");
  if (k > 16) throw ResourceError("cycle length above 16 refused");
}

}  // namespace

std::vector<std::int64_t> cycle_census(const Graph& g, int k, int threads) {
  check_cycle_length(k);
  if (threads < 1) throw ParameterError("thread count must be positive");
  const auto& edges = g.edge_list();
  std::vector<std::int64_t> counts(edges.size(), 0);
  const AdjBits adj(g);

  auto worker = [&](int t) {
    EdgeCounter counter(g, adj, k);
    for (size_t i = t; i < edges.size(); i += threads)
      counts[i] = counter.count(edges[i].first, edges[i].second);
  };
  if (threads == 1 || edges.size() < 2) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return counts;
}

std::vector<std::int64_t> cycle_census_oracle(const Graph& g, int k) {
  check_cycle_length(k);
  const int n = g.order();
  std::vector<std::int64_t> counts(g.edge_list().size(), 0);
  std::vector<int> path;
  std::vector<char> onpath(n, 0);

  // Canonical cycle: starts at its smallest vertex r, and the successor of r
  // is smaller than the predecessor, so each cycle is built exactly once.
  auto record = [&](int r) {
    counts[g.edge_index(path.back(), r)] += 1;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      counts[g.edge_index(path[i], path[i + 1])] += 1;
  };

  std::function<void(int, int)> extend = [&](int r, int depth) {
    const int x = path.back();
    for (int w : g.neighbors(x)) {
      if (w <= r || onpath[w]) continue;
      if (depth == k - 1) {
        if (g.has_edge(w, r) && path[1] < w) {
          path.push_back(w);
          record(r);
          path.pop_back();
        }
        continue;
      }
      onpath[w] = 1;
      path.push_back(w);
      extend(r, depth + 1);
      path.pop_back();
      onpath[w] = 0;
    }
  };

  for (int r = 0; r < n; ++r) {
    path.assign(1, r);
    onpath[r] = 1;
    // depth counts vertices placed so far; a k-cycle has k vertices
    if (k >= 3) extend(r, 1);
    onpath[r] = 0;
  }
  return counts;
}

EgrReport analyze_egr(const Graph& g, int threads) {
  if (g.edge_count() == 0) throw DomainError("graph has no edges");
  EgrReport rep;
  rep.order = g.order();
  for (int v = 0; v < g.order(); ++v) rep.degree_multiset[g.degree(v)] += 1;
  rep.girth = girth(g);
  if (!rep.girth) throw DomainError("graph is acyclic");

  const auto counts = cycle_census(g, *rep.girth, threads);
  std::int64_t total = 0;
  for (auto c : counts) {
    rep.lambda_multiset[c] += 1;
    total += c;
  }
  if (total % *rep.girth != 0)
    throw InternalError("census total not divisible by the girth");

  rep.is_egr = rep.degree_multiset.size() == 1 && rep.lambda_multiset.size() == 1;
  if (rep.is_egr) rep.lambda = rep.lambda_multiset.begin()->first;
  return rep;
}

}  // namespace egr
