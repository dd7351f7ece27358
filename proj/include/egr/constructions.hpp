#ifndef EGR_CONSTRUCTIONS_HPP
#define EGR_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "egr/graph.hpp"

namespace egr {

// Vertex indexing of the biaffine incidence graph on 2q^2 vertices:
// point (x,y) -> x*q + y in [0, q^2), line [m,b] -> q^2 + m*q + b in
// [q^2, 2q^2), with field elements named by their index. Blocks P_x and
// L_m are contiguous index ranges.
struct BiaffineLabeling {
  int q;

  int point(int x, int y) const { return x * q + y; }
  int line(int m, int b) const { return q * q + m * q + b; }
  bool is_point(int v) const { return v < q * q; }
  std::pair<int, int> point_coords(int v) const { return {v / q, v % q}; }
  std::pair<int, int> line_coords(int v) const {
    v -= q * q;
    return {v / q, v % q};
  }
};

// Incidence graph of the order-q biaffine plane: point (x,y) adjacent to
// line [m,b] iff y = m*x + b in GF(q). Bipartite, q-regular, 2q^2 vertices,
// girth 6 for q >= 3 and 8 for q = 2.
Graph biaffine(int q);

// The translation (x,y) -> (x+a, y+b) as a permutation of the biaffine
// vertices. Lines follow the slope-preserving rule [m,c] -> [m, c + b - m*a],
// the unique completion compatible with incidence.
std::vector<int> biaffine_translation(int q, int a, int b);

// Point/line swap of the q = 4 plane: (i,j) -> [i, a*j] and [i,j] -> (a*i, a*j)
// with a the index-2 generator of GF(4). Preserves the incidences of
// biaffine(4); together with the translations it moves any vertex to any
// other. It does not respect the extra matching of special32().
std::vector<int> phi_alpha();

// The 16 matching edges added on top of biaffine(4): point pairs
// {(i,0),(i,1)} and {(i,a),(i,a^2)}, line pairs {[j,0],[j,a]} and
// {[j,1],[j,a^2]}, for every i, j in GF(4).
std::vector<std::pair<int, int>> special32_matching();

// biaffine(4) plus the matching: 5-regular on 32 vertices, girth 5, and
// every edge lies on exactly 12 pentagons.
Graph special32();

}  // namespace egr

#endif
