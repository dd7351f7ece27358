#ifndef EGR_GRAPH_HPP
#define EGR_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace egr {

// Simple undirected graph, immutable once built. Vertices are 0-based;
// neighbor lists are sorted, edge_list() is lexicographic with u < v.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {});

  // Adjacency lists must already describe a simple symmetric graph.
  static Graph from_adjacency(const std::vector<std::vector<int>>& adj,
                              std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edge_list_.size()); }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  bool has_edge(int u, int v) const;
  // Index into edge_list(), or -1 when {u,v} is not an edge.
  std::int64_t edge_index(int u, int v) const;
  const std::vector<std::pair<int, int>>& edge_list() const { return edge_list_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const { return labels_[v]; }

 private:
  int n_ = 0;
  std::vector<int> offsets_;
  std::vector<int> adj_;
  std::vector<std::pair<int, int>> edge_list_;
  std::vector<std::string> labels_;
};

}  // namespace egr

#endif
