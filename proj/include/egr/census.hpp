#ifndef EGR_CENSUS_HPP
#define EGR_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "egr/graph.hpp"

namespace egr {

// Length of a shortest cycle; nullopt when the graph is acyclic. Exact:
// BFS from every vertex, closing non-tree edges.
std::optional<int> girth(const Graph& g);

// For every edge (aligned with g.edge_list()), the number of distinct simple
// cycles of length exactly k containing that edge. A cycle is a set of
// edges: traversal direction and rotation do not multiply the count.
// Per-edge rooted search over simple paths with distance pruning; `threads`
// only partitions the edges, the output never depends on it.
// ParameterError for k < 3, ResourceError for k > 16.
std::vector<std::int64_t> cycle_census(const Graph& g, int k, int threads = 1);

// Same contract, structurally different algorithm: enumerates every k-cycle
// once through its canonical traversal (smallest vertex first, smaller
// second vertex fixes the direction) and accumulates per edge. Intended as
// a cross-check on small graphs.
std::vector<std::int64_t> cycle_census_oracle(const Graph& g, int k);

struct EgrReport {
  int order = 0;
  std::map<int, int> degree_multiset;                     // degree -> #vertices
  std::optional<int> girth;                               // nullopt: acyclic
  std::map<std::int64_t, std::int64_t> lambda_multiset;   // g-cycle count -> #edges
  bool is_egr = false;
  std::optional<std::int64_t> lambda;                     // set when is_egr

  bool is_regular() const { return degree_multiset.size() == 1; }
  int degree() const { return degree_multiset.begin()->first; }

  bool operator==(const EgrReport&) const = default;
};

// Girth, census at the girth, regularity verdict. The graph is egr exactly
// when it is regular and every edge lies on the same number of girth-cycles.
// DomainError when the graph has no edge or no cycle.
EgrReport analyze_egr(const Graph& g, int threads = 1);

}  // namespace egr

#endif
