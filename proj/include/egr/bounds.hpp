#ifndef EGR_BOUNDS_HPP
#define EGR_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "egr/graph.hpp"

namespace egr {

// Moore lower bound on the order of a k-regular graph of girth g, computed
// by exact tree counting. ParameterError for k < 3 or g < 3.
std::int64_t moore_bound(int k, int g);

struct BoundQuery {
  int k = 0;
  int g = 0;
  std::int64_t lambda = 0;
  bool bipartite = false;      // use the stronger bipartite form (even g)
  bool parity_refine = false;  // odd k forces an even order
};

struct BoundReport {
  std::int64_t n0 = 0;         // Moore bound
  std::int64_t egr_bound = 0;  // lower bound on the smallest egr order
  std::int64_t refined = 0;    // after the parity step, when requested
  bool admissible = false;     // lambda within its admissible range
  std::vector<std::string> notes;
};

// Lower bound on the order of an egr(v,k,g,lambda) graph.
//   odd g:            n0 + (k-1)^{(g-1)/2} - lambda
//   even g:           n0 + ceil(2((k-1)^{g/2} - lambda)/k)
//   even g bipartite: n0 + 2*ceil(((k-1)^{g/2} - lambda)/k)
// When lambda is not admissible the report is flagged and carries n0 only.
BoundReport egr_lower_bound(const BoundQuery& q);

// A k-regular graph with k odd has even order, so an odd bound rounds up.
std::int64_t parity_refine(int k, std::int64_t bound);

struct ExcessReport {
  std::int64_t v = 0;
  std::int64_t bound = 0;   // best lower bound after the whole chain
  std::int64_t excess = 0;  // v - bound
  std::string verdict;      // "extremal-certified" or "gap <= excess"
  BoundReport bound_report;
  std::vector<std::string> notes;
};

// Compares an achieved order v against the bound chain: egr lower bound,
// then repeatedly the parity step and any orders proven impossible by an
// external audit. v below the chained bound is an input inconsistency.
ExcessReport excess_report(std::int64_t v, const BoundQuery& q,
                           const std::vector<std::int64_t>& excluded_orders = {});

}  // namespace egr

#endif
