#include "egr/suzuki.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "egr/automorphism.hpp"
#include "egr/errors.hpp"

namespace egr {

namespace {

// apply a, then b
Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm identity_perm(int n) {
  Perm r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

std::vector<int> sorted_image(const std::vector<int>& pts, const Perm& g) {
  std::vector<int> img(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) img[i] = g[pts[i]];
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

std::vector<Mat4> suzuki_generators(const Field& f) {
  const long long se = suzuki_sigma_exponent(f);  // validates the field shape
  auto sigma = [&](int x) { return f.pow(x, se); };

  // S(c,d) sends the parametrized point (a,b) to (a+c, b+d+c^s a); the first
  // row carries the image of the norm-like coordinate.
  auto unipotent = [&](int c, int d) {
    Mat4 m{};
    const int cs = sigma(c);                      // c^s
    const int cs1 = f.mul(cs, c);                 // c^{s+1}
    const int cs2 = f.mul(cs, f.mul(c, c));       // c^{s+2}
    m[0] = {1, c, f.add(d, cs1), f.add(f.add(f.mul(c, d), cs2), sigma(d))};
    m[1] = {0, 1, cs, d};
    m[2] = {0, 0, 1, c};
    m[3] = {0, 0, 0, 1};
    return m;
  };

  const int k = f.primitive_element();
  Mat4 torus{};
  torus[0][0] = f.mul(sigma(k), f.mul(k, k));  // k^{s+2}
  torus[1][1] = f.mul(sigma(k), k);            // k^{s+1}
  torus[2][2] = k;
  torus[3][3] = 1;

  Mat4 invol{};
  invol[0][3] = invol[1][2] = invol[2][1] = invol[3][0] = 1;

  return {unipotent(1, 0), unipotent(0, 1), torus, invol};
}

std::vector<OvoidPoint> suzuki_ovoid(const Field& f) {
  const long long se = suzuki_sigma_exponent(f);
  const int q = f.q();
  std::vector<OvoidPoint> pts;
  pts.reserve(q * q + 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const int norm =
          f.add(f.add(f.mul(a, b), f.mul(f.pow(a, se), f.mul(a, a))),
                f.pow(b, se));
      pts.push_back({{norm, b, a, 1}});
    }
  pts.push_back({{1, 0, 0, 0}});
  return pts;
}

SuzukiSystem::SuzukiSystem(int q) : q_(q), field_(Field::make(q)) {
  if (!is_suzuki_field(field_))
    throw ParameterError("q must be 2^{2e+1} with e >= 1; got " +
                         std::to_string(q));
  gens_ = suzuki_generators(field_);
  ovoid_ = suzuki_ovoid(field_);
  for (const auto& m : gens_) gen_perms_.push_back(permutation_of(m));
}

Perm SuzukiSystem::permutation_of(const Mat4& m) const {
  std::map<std::array<int, 4>, int> index;
  for (size_t i = 0; i < ovoid_.size(); ++i) index[ovoid_[i].coords] = static_cast<int>(i);

  Perm perm(ovoid_.size());
  std::vector<char> hit(ovoid_.size(), 0);
  for (size_t i = 0; i < ovoid_.size(); ++i) {
    std::array<int, 4> w{};
    for (int r = 0; r < 4; ++r) {
      int acc = 0;
      for (int c = 0; c < 4; ++c)
        acc = field_.add(acc, field_.mul(m[r][c], ovoid_[i].coords[c]));
      w[r] = acc;
    }
    int last = 3;
    while (last >= 0 && w[last] == 0) --last;
    if (last < 0) throw InternalError("matrix maps an ovoid point to zero");
    const int scale = field_.inv(w[last]);
    for (int r = 0; r < 4; ++r) w[r] = field_.mul(w[r], scale);
    const auto it = index.find(w);
    if (it == index.end())
      throw InternalError("matrix does not preserve the ovoid");
    perm[i] = it->second;
    hit[it->second] = 1;
  }
  for (char h : hit)
    if (!h) throw InternalError("matrix action on the ovoid is not bijective");
  return perm;
}

const std::vector<Perm>& SuzukiSystem::group() {
  if (!group_.empty()) return group_;
  if (q_ > 8)
    throw ResourceError("group enumeration refused for q = " +
                        std::to_string(q_) + " (only q = 8 is desk-scale)");

  const int npts = static_cast<int>(ovoid_.size());
  std::set<Perm> seen;
  std::vector<Perm> frontier{identity_perm(npts)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& s : gen_perms_) {
        Perm h = perm_mul(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  group_.assign(seen.begin(), seen.end());  // std::set keeps them sorted

  const long long expected =
      static_cast<long long>(q_) * q_ * (static_cast<long long>(q_) * q_ + 1) *
      (q_ - 1);
  if (static_cast<long long>(group_.size()) != expected)
    throw InternalError("group closure has " + std::to_string(group_.size()) +
                        " elements, expected " + std::to_string(expected));
  return group_;
}

void SuzukiSystem::build_circles() {
  if (!circles_.empty()) return;
  require_group();

  const int q = q_;
  const int npts = static_cast<int>(ovoid_.size());

  // Classify every plane of PG(3,q) by its ovoid section.
  tangent_planes_ = 0;
  std::vector<std::vector<int>> sections;
  std::array<int, 4> u{};
  auto scan_plane = [&]() {
    std::vector<int> sec;
    for (int i = 0; i < npts; ++i) {
      int acc = 0;
      for (int c = 0; c < 4; ++c)
        acc = field_.add(acc, field_.mul(u[c], ovoid_[i].coords[c]));
      if (acc == 0) sec.push_back(i);
    }
    if (sec.size() == 1)
      ++tangent_planes_;
    else if (static_cast<int>(sec.size()) == q + 1)
      sections.push_back(std::move(sec));
    else
      throw InternalError("plane meets the ovoid in " +
                          std::to_string(sec.size()) + " points");
  };
  for (int k = 0; k < 4; ++k) {
    // normalized dual vectors: u[k] = 1, zeros above, free below
    u = {0, 0, 0, 0};
    u[k] = 1;
    std::vector<int> free(k, 0);
    for (;;) {
      for (int i = 0; i < k; ++i) u[i] = free[i];
      scan_plane();
      int i = 0;
      while (i < k && ++free[i] == q) free[i++] = 0;
      if (i == k) break;
    }
  }
  if (tangent_planes_ != q * q + 1)
    throw InternalError("expected " + std::to_string(q * q + 1) +
                        " tangent planes, found " + std::to_string(tangent_planes_));
  std::sort(sections.begin(), sections.end());
  if (std::adjacent_find(sections.begin(), sections.end()) != sections.end())
    throw InternalError("duplicate secant section");
  if (static_cast<long long>(sections.size()) !=
      static_cast<long long>(q) * (q * q + 1))
    throw InternalError("expected " + std::to_string(q * (q * q + 1)) +
                        " circles, found " + std::to_string(sections.size()));

  // Base circle stabilizer and its fixed point.
  const std::vector<int>& base = sections.front();
  for (const auto& g : group_)
    if (sorted_image(base, g) == base) stab_.push_back(g);
  if (static_cast<int>(stab_.size()) != q * (q - 1))
    throw InternalError("base circle stabilizer has order " +
                        std::to_string(stab_.size()) + ", expected " +
                        std::to_string(q * (q - 1)));

  const auto orbits = vertex_orbits(npts, stab_);
  std::vector<int> sizes;
  for (const auto& orb : orbits) sizes.push_back(static_cast<int>(orb.size()));
  std::sort(sizes.begin(), sizes.end());
  const std::vector<int> expected_sizes{1, q, q * q - q};
  if (sizes != expected_sizes)
    throw InternalError("stabilizer orbit sizes are not [1, q, q^2-q]");
  for (const auto& orb : orbits)
    if (orb.size() == 1) nucleus0_ = orb.front();
  if (nucleus0_ < 0 || !std::binary_search(base.begin(), base.end(), nucleus0_))
    throw InternalError("stabilizer fixed point is not on the base circle");
  for (const auto& orb : orbits)
    if (static_cast<int>(orb.size()) == q) {
      std::vector<int> rest;
      for (int p : base)
        if (p != nucleus0_) rest.push_back(p);
      if (orb != rest)
        throw InternalError("size-q orbit is not the rest of the base circle");
    }

  // Transport (base, nucleus) along the group to label every circle.
  std::map<std::vector<int>, int> section_index;
  for (size_t i = 0; i < sections.size(); ++i)
    section_index[sections[i]] = static_cast<int>(i);
  std::vector<int> nucleus(sections.size(), -1);
  for (const auto& g : group_) {
    const auto it = section_index.find(sorted_image(base, g));
    if (it == section_index.end())
      throw InternalError("group element maps the base circle off the circle list");
    const int nu = g[nucleus0_];
    if (nucleus[it->second] == -1)
      nucleus[it->second] = nu;
    else if (nucleus[it->second] != nu)
      throw InternalError("nucleus transport is inconsistent");
  }

  circles_.resize(sections.size());
  for (size_t i = 0; i < sections.size(); ++i) {
    if (nucleus[i] < 0) throw InternalError("circle missed by the transport orbit");
    circles_[i].points = std::move(sections[i]);
    circles_[i].nucleus = nucleus[i];
  }

  // Every ordered pair (x, y) of distinct ovoid points lies in exactly one
  // circle with nucleus x.
  std::vector<int> pair_count(static_cast<size_t>(npts) * npts, 0);
  for (const auto& c : circles_)
    for (int p : c.points)
      if (p != c.nucleus) ++pair_count[static_cast<size_t>(c.nucleus) * npts + p];
  for (int x = 0; x < npts; ++x)
    for (int y = 0; y < npts; ++y)
      if (x != y && pair_count[static_cast<size_t>(x) * npts + y] != 1)
        throw InternalError("ordered point pairs are not uniquely covered");
}

void SuzukiSystem::require_group() { group(); }

const std::vector<Circle>& SuzukiSystem::circles() {
  build_circles();
  return circles_;
}

int SuzukiSystem::tangent_plane_count() {
  build_circles();
  return tangent_planes_;
}

const std::vector<Perm>& SuzukiSystem::base_circle_stabilizer() {
  build_circles();
  return stab_;
}

int SuzukiSystem::base_nucleus() {
  build_circles();
  return nucleus0_;
}

int SuzukiSystem::circle_image_of(const Perm& g) {
  build_circles();
  const auto img = sorted_image(circles_.front().points, g);
  const auto it = std::lower_bound(
      circles_.begin(), circles_.end(), img,
      [](const Circle& c, const std::vector<int>& pts) { return c.points < pts; });
  if (it == circles_.end() || it->points != img)
    throw InternalError("image of the base circle is not a circle");
  return static_cast<int>(it - circles_.begin());
}

Perm SuzukiSystem::induced_circle_perm(const Perm& g) {
  build_circles();
  Perm result(circles_.size());
  for (size_t i = 0; i < circles_.size(); ++i) {
    const auto img = sorted_image(circles_[i].points, g);
    const auto it = std::lower_bound(
        circles_.begin(), circles_.end(), img,
        [](const Circle& c, const std::vector<int>& pts) { return c.points < pts; });
    if (it == circles_.end() || it->points != img)
      throw InternalError("group element does not permute the circles");
    result[i] = static_cast<int>(it - circles_.begin());
  }
  return result;
}

int SuzukiSystem::recompute_nucleus(int circle_index) {
  build_circles();
  const auto& pts = circles_.at(circle_index).points;
  std::vector<Perm> stab;
  for (const auto& g : group_)
    if (sorted_image(pts, g) == pts) stab.push_back(g);
  const auto orbits = vertex_orbits(static_cast<int>(ovoid_.size()), stab);
  int fixed = -1;
  for (const auto& orb : orbits)
    if (orb.size() == 1) {
      if (fixed >= 0) throw InternalError("circle stabilizer fixes two points");
      fixed = orb.front();
    }
  if (fixed < 0) throw InternalError("circle stabilizer fixes no point");
  return fixed;
}

Graph SuzukiSystem::graph() {
  build_circles();
  const int npts = static_cast<int>(ovoid_.size());
  const int ncirc = static_cast<int>(circles_.size());

  // circle with nucleus x through point y
  std::vector<int> through(static_cast<size_t>(npts) * npts, -1);
  for (int c = 0; c < ncirc; ++c)
    for (int p : circles_[c].points)
      if (p != circles_[c].nucleus)
        through[static_cast<size_t>(circles_[c].nucleus) * npts + p] = c;

  std::set<std::pair<int, int>> nucleus_pairs;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < ncirc; ++c) {
    const int nc = circles_[c].nucleus;
    for (int y : circles_[c].points) {
      if (y == nc) continue;
      const int d = through[static_cast<size_t>(y) * npts + nc];
      if (d < 0) throw InternalError("missing partner circle");
      if (c < d) {
        edges.emplace_back(c, d);
        if (!nucleus_pairs.emplace(std::min(nc, y), std::max(nc, y)).second)
          throw InternalError("two edges share a nucleus pair");
      }
    }
  }
  Graph g = Graph::from_edges(ncirc, edges);
  if (g.edge_count() != static_cast<std::int64_t>(ncirc) * q_ / 2)
    throw InternalError("unexpected edge count; the graph is not simple");
  for (int v = 0; v < ncirc; ++v)
    if (g.degree(v) != q_) throw InternalError("graph is not q-regular");
  return g;
}

void SuzukiSystem::build_oracle() {
  if (oracle_built_) return;
  build_circles();
  const int q = q_;

  // G2 stabilizes {nucleus, p} with p the smallest point of the size-q orbit.
  int p = -1;
  for (int x : circles_.front().points)
    if (x != nucleus0_) {
      p = x;
      break;
    }
  std::vector<Perm> g2;
  for (const auto& g : group_) {
    const int a = g[nucleus0_], b = g[p];
    if ((a == nucleus0_ && b == p) || (a == p && b == nucleus0_)) g2.push_back(g);
  }
  if (static_cast<int>(g2.size()) != 2 * (q - 1))
    throw InternalError("|G2| = " + std::to_string(g2.size()) + ", expected " +
                        std::to_string(2 * (q - 1)));
  std::vector<Perm> both;
  std::set_intersection(stab_.begin(), stab_.end(), g2.begin(), g2.end(),
                        std::back_inserter(both));
  if (static_cast<int>(both.size()) != q - 1)
    throw InternalError("|G1 ∩ G2| = " + std::to_string(both.size()) +
                        ", expected " + std::to_string(q - 1));

  // Canonical coset representative: the lexicographically smallest element.
  auto coset_rep = [](const std::vector<Perm>& sub, const Perm& g) {
    Perm best = perm_mul(sub.front(), g);
    for (size_t i = 1; i < sub.size(); ++i) {
      Perm cand = perm_mul(sub[i], g);
      if (cand < best) best = std::move(cand);
    }
    return best;
  };

  // Vertex cosets of G1.
  std::vector<Perm> reps(group_.size());
  std::map<Perm, int> vertex_id;
  for (size_t i = 0; i < group_.size(); ++i) {
    reps[i] = coset_rep(stab_, group_[i]);
    vertex_id.emplace(reps[i], -1);
  }
  int next_id = 0;
  for (auto& [rep, id] : vertex_id) id = next_id++;  // ids in sorted rep order
  std::vector<int> vid(group_.size());
  for (size_t i = 0; i < group_.size(); ++i) vid[i] = vertex_id.at(reps[i]);
  reps.clear();
  reps.shrink_to_fit();
  const int nverts = static_cast<int>(vertex_id.size());
  if (nverts != q * (q * q + 1))
    throw InternalError("expected " + std::to_string(q * (q * q + 1)) +
                        " vertex cosets, found " + std::to_string(nverts));

  // Edge cosets of G2 and their incident vertex cosets.
  std::set<Perm> edge_reps;
  for (const auto& g : group_) edge_reps.insert(coset_rep(g2, g));
  if (static_cast<long long>(edge_reps.size()) !=
      static_cast<long long>(q) * q * (q * q + 1) / 2)
    throw InternalError("unexpected number of edge cosets");

  auto element_index = [&](const Perm& g) {
    const auto it = std::lower_bound(group_.begin(), group_.end(), g);
    if (it == group_.end() || *it != g)
      throw InternalError("coset element missing from the group");
    return static_cast<size_t>(it - group_.begin());
  };

  std::set<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> edges;
  for (const auto& rep : edge_reps) {
    std::set<int> incident;
    for (const auto& h : g2) incident.insert(vid[element_index(perm_mul(h, rep))]);
    if (incident.size() != 2)
      throw InternalError("edge coset meets " + std::to_string(incident.size()) +
                          " vertex cosets, expected 2");
    const int a = *incident.begin(), b = *std::next(incident.begin());
    if (!pairs.emplace(a, b).second)
      throw InternalError("two edge cosets join the same vertex pair");
    edges.emplace_back(a, b);
  }
  oracle_graph_ = Graph::from_edges(nverts, edges);

  // Transport bijection: the coset of g corresponds to the circle g sends
  // the base circle to.
  oracle_to_circle_.assign(nverts, -1);
  for (const auto& [rep, id] : vertex_id) {
    const int c = circle_image_of(rep);
    if (oracle_to_circle_[id] != -1)
      throw InternalError("duplicate vertex id in the oracle map");
    oracle_to_circle_[id] = c;
  }
  std::vector<char> seen(nverts, 0);
  for (int c : oracle_to_circle_) {
    if (c < 0 || c >= nverts || seen[c])
      throw InternalError("oracle-to-circle map is not a bijection");
    seen[c] = 1;
  }
  oracle_built_ = true;
}

Graph SuzukiSystem::coset_oracle_graph() {
  build_oracle();
  return oracle_graph_;
}

const std::vector<int>& SuzukiSystem::oracle_to_circle_map() {
  build_oracle();
  return oracle_to_circle_;
}

Graph suzuki_graph(int q) {
  SuzukiSystem sys(q);
  return sys.graph();
}

Graph suzuki_coset_oracle_graph(int q) {
  SuzukiSystem sys(q);
  return sys.coset_oracle_graph();
}

}  // namespace egr
