#ifndef EGR_SUZUKI_HPP
#define EGR_SUZUKI_HPP

#include <array>
#include <vector>

#include "egr/field.hpp"
#include "egr/graph.hpp"

namespace egr {

using Mat4 = std::array<std::array<int, 4>, 4>;  // row-major, field element indices
using Perm = std::vector<int>;

struct OvoidPoint {
  std::array<int, 4> coords;  // homogeneous, last nonzero coordinate is 1
  auto operator<=>(const OvoidPoint&) const = default;
};

struct Circle {
  std::vector<int> points;  // q+1 ovoid indices, sorted
  int nucleus = -1;         // ovoid index; always one of points
};

// Matrix generators in the natural 4-dimensional representation: the
// unipotent maps S(1,0) and S(0,1), a torus element of order q-1 built from
// the smallest primitive field element, and the antidiagonal involution.
// Each generator permutes the ovoid; the wider conventions are validated by
// the runtime assertions in SuzukiSystem.
std::vector<Mat4> suzuki_generators(const Field& f);

// The ovoid: points (a*b + a^{s+2} + b^s : b : a : 1) for all a, b, with
// s the Suzuki endomorphism, plus the distinguished point (1:0:0:0) at the
// end. q^2 + 1 points, no three collinear.
std::vector<OvoidPoint> suzuki_ovoid(const Field& f);

// Staged pipeline from the field up to the two graphs. Every stage asserts
// the structure it depends on (group order, plane classification, stabilizer
// orbit sizes, nucleus transport consistency) and throws InternalError when
// a convention does not hold, so a wrong choice cannot fail silently.
class SuzukiSystem {
 public:
  // Requires q = 2^{2e+1} with e >= 1 (and q within field limits).
  explicit SuzukiSystem(int q);

  int q() const { return q_; }
  const Field& field() const { return field_; }
  const std::vector<Mat4>& generators() const { return gens_; }
  const std::vector<OvoidPoint>& ovoid() const { return ovoid_; }
  const std::vector<Perm>& generator_perms() const { return gen_perms_; }

  // Action of a matrix on ovoid indices; InternalError if the matrix does
  // not map the ovoid onto itself.
  Perm permutation_of(const Mat4& m) const;

  // Breadth-first closure of the generator permutations, sorted. Refused
  // for q > 8 (the next group already has ~3*10^7 elements).
  const std::vector<Perm>& group();

  // Secant-plane sections with their nuclei, sorted by point set. The
  // nucleus of the first circle comes from its stabilizer's fixed point and
  // is transported along the group action to every other circle.
  const std::vector<Circle>& circles();
  int tangent_plane_count();
  const std::vector<Perm>& base_circle_stabilizer();
  int base_nucleus();

  // Index of the circle the base circle maps to under g.
  int circle_image_of(const Perm& g);
  // The permutation g induces on circle indices.
  Perm induced_circle_perm(const Perm& g);
  // Nucleus recomputed from scratch (stabilizer filtering) for one circle;
  // for spot-checking the transported labels.
  int recompute_nucleus(int circle_index);

  // Vertices are circles; C ~ C' iff the nucleus of each is a non-nucleus
  // point of the other. q-regular on q(q^2+1) vertices, girth 5.
  Graph graph();

  // Literal coset-geometry construction: vertices are the cosets of the
  // base circle stabilizer G1, edges the cosets of the stabilizer G2 of
  // {nucleus, p} with p the smallest point of the size-q orbit, incidence
  // is nonempty intersection. Must be isomorphic to graph().
  Graph coset_oracle_graph();
  // The transport bijection (vertex coset -> circle that the coset's
  // elements send the base circle to), as a vertex map from
  // coset_oracle_graph() onto graph().
  const std::vector<int>& oracle_to_circle_map();

 private:
  void require_group();
  void build_circles();
  void build_oracle();

  int q_;
  Field field_;
  std::vector<Mat4> gens_;
  std::vector<OvoidPoint> ovoid_;
  std::vector<Perm> gen_perms_;
  std::vector<Perm> group_;
  std::vector<Circle> circles_;
  int tangent_planes_ = -1;
  std::vector<Perm> stab_;
  int nucleus0_ = -1;
  Graph oracle_graph_;
  std::vector<int> oracle_to_circle_;
  bool oracle_built_ = false;
};

// Convenience wrappers running the full pipeline.
Graph suzuki_graph(int q);
Graph suzuki_coset_oracle_graph(int q);

}  // namespace egr

#endif
