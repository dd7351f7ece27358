#include "egr/constructions.hpp"

#include <string>

#include "egr/errors.hpp"
#include "egr/field.hpp"

namespace egr {

namespace {

std::vector<std::string> biaffine_labels(int q) {
  const BiaffineLabeling lab{q};
  std::vector<std::string> labels(2 * q * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      labels[lab.point(x, y)] =
          "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      labels[lab.line(x, y)] =
          "[" + std::to_string(x) + "," + std::to_string(y) + "]";
    }
  return labels;
}

}  // namespace

Graph biaffine(int q) {
  const Field f = Field::make(q);  // rejects non prime powers / oversize q
  const BiaffineLabeling lab{q};
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(q) * q * q);
  for (int m = 0; m < q; ++m)
    for (int b = 0; b < q; ++b)
      for (int x = 0; x < q; ++x)
        edges.emplace_back(lab.point(x, f.add(f.mul(m, x), b)), lab.line(m, b));
  return Graph::from_edges(2 * q * q, edges, biaffine_labels(q));
}

std::vector<int> biaffine_translation(int q, int a, int b) {
  const Field f = Field::make(q);
  if (a < 0 || a >= q || b < 0 || b >= q)
    throw ParameterError("translation parameters must be field elements");
  const BiaffineLabeling lab{q};
  std::vector<int> perm(2 * q * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      perm[lab.point(x, y)] = lab.point(f.add(x, a), f.add(y, b));
  for (int m = 0; m < q; ++m)
    for (int c = 0; c < q; ++c)
      perm[lab.line(m, c)] = lab.line(m, f.sub(f.add(c, b), f.mul(m, a)));
  return perm;
}

std::vector<int> phi_alpha() {
  const Field f = Field::make(4);
  const int alpha = 2;
  const BiaffineLabeling lab{4};
  std::vector<int> perm(32);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      perm[lab.point(i, j)] = lab.line(i, f.mul(alpha, j));
      perm[lab.line(i, j)] = lab.point(f.mul(alpha, i), f.mul(alpha, j));
    }
  return perm;
}

std::vector<std::pair<int, int>> special32_matching() {
  const int alpha = 2, alpha2 = 3;  // GF(4): a and a^2 = a+1
  const BiaffineLabeling lab{4};
  std::vector<std::pair<int, int>> m;
  for (int i = 0; i < 4; ++i) {
    m.emplace_back(lab.point(i, 0), lab.point(i, 1));
    m.emplace_back(lab.point(i, alpha), lab.point(i, alpha2));
    m.emplace_back(lab.line(i, 0), lab.line(i, alpha));
    m.emplace_back(lab.line(i, 1), lab.line(i, alpha2));
  }
  return m;
}

Graph special32() {
  const Graph base = biaffine(4);
  std::vector<std::pair<int, int>> edges = base.edge_list();
  for (auto e : special32_matching()) edges.push_back(e);
  std::vector<std::string> labels;
  for (int v = 0; v < 32; ++v) labels.push_back(base.label(v));
  return Graph::from_edges(32, edges, std::move(labels));
}

}  // namespace egr
