#ifndef EGR_AUTOMORPHISM_HPP
#define EGR_AUTOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "egr/graph.hpp"

namespace egr {

// True iff perm maps edges to edges and non-edges to non-edges.
// ParameterError if perm is not a bijection on [0, n).
bool is_automorphism(const Graph& g, const std::vector<int>& perm);

// Orbit partition of the group generated by gens acting on [0, n).
// Orbits are listed by smallest member; members sorted ascending.
std::vector<std::vector<int>> vertex_orbits(
    int n, const std::vector<std::vector<int>>& gens);

// Exact order of the full automorphism group, by backtracking over
// candidate maps after degree / distance-profile / neighborhood-color
// refinement. ResourceError when g.order() > max_order.
std::int64_t automorphism_group_order(const Graph& g, int max_order = 64);

// Whether an edge-preserving vertex bijection g1 -> g2 exists. Same search
// machinery as automorphism counting, stopping at the first hit.
// ResourceError when either order exceeds max_order.
bool are_isomorphic(const Graph& g1, const Graph& g2, int max_order = 64);

}  // namespace egr

#endif
