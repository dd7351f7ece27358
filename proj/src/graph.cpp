#include "egr/graph.hpp"

#include <algorithm>

#include "egr/errors.hpp"

namespace egr {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw ParameterError("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ParameterError("label count does not match vertex count");

  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop rejected");
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());

  Graph g;
  g.n_ = n;
  g.edge_list_ = std::move(es);
  g.labels_ = std::move(labels);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : g.edge_list_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<int> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edge_list_) {
    g.adj_[pos[u]++] = v;
    g.adj_[pos[v]++] = u;
  }
  // edge_list_ is sorted, so each neighbor list comes out sorted already;
  // enforce it anyway in case the fill order above ever changes.
  for (int v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
  return g;
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& adj,
                            std::vector<std::string> labels) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u) {
    std::vector<int> seen;
    for (int v : adj[u]) {
      if (v < 0 || v >= n)
        throw ParameterError("neighbor index out of range at vertex " + std::to_string(u));
      if (v == u) throw ParameterError("self-loop at vertex " + std::to_string(u));
      seen.push_back(v);
      if (u < v) es.emplace_back(u, v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw ParameterError("duplicate neighbor at vertex " + std::to_string(u));
  }
  // symmetry: u in adj[v] iff v in adj[u]
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (std::find(adj[v].begin(), adj[v].end(), u) == adj[v].end())
        throw ParameterError("asymmetric adjacency between vertices " +
                             std::to_string(u) + " and " + std::to_string(v));
  return from_edges(n, es, std::move(labels));
}

bool Graph::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edge_list_.begin(), edge_list_.end(),
                                   std::make_pair(u, v));
  if (it == edge_list_.end() || *it != std::make_pair(u, v)) return -1;
  return it - edge_list_.begin();
}

}  // namespace egr
