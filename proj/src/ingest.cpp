#include "egr/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "egr/errors.hpp"

namespace egr {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kMaxGraph6Order = 1 << 18;

int g6_byte(std::string_view s, size_t pos) {
  if (pos >= s.size())
    throw ParseError("truncated graph6 record", static_cast<long long>(pos));
  const unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte outside graph6 range [63,126]",
                     static_cast<long long>(pos));
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view bytes) {
  size_t pos = 0;
  if (bytes.substr(0, kGraph6Header.size()) == kGraph6Header)
    pos = kGraph6Header.size();

  long long n;
  const int first = g6_byte(bytes, pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else {
    // '~' prefix: 18-bit count in three more bytes ('~~' is beyond our range)
    if (pos + 1 < bytes.size() && bytes[pos + 1] == '~')
      throw ResourceError("graph6 order beyond 2^18 refused");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(bytes, pos + i);
    pos += 4;
  }
  if (n > kMaxGraph6Order) throw ResourceError("graph6 order beyond 2^18 refused");

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (long long byteidx = 0; byteidx < nbytes; ++byteidx) {
    const int val = g6_byte(bytes, pos + byteidx);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (val >> b) & 1;
      if (bit >= nbits) {
        if (set)
          throw ParseError("nonzero padding bit",
                           static_cast<long long>(pos + byteidx));
        continue;
      }
      if (set) {
        // column-major upper triangle: bit index -> (i, j), i < j
        long long lo = 1, hi = n - 1;
        while (lo < hi) {  // smallest j with j(j-1)/2 > bit
          const long long mid = (lo + hi) / 2;
          if (mid * (mid + 1) / 2 > bit)
            hi = mid;
          else
            lo = mid + 1;
        }
        const long long j = lo;
        const long long i = bit - j * (j - 1) / 2;
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  pos += nbytes;
  if (pos != bytes.size())
    throw ParseError("trailing garbage after graph6 record",
                     static_cast<long long>(pos));
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw ResourceError("graph6 output beyond order 258047 not supported");
  }
  const long long nbits = n * (n - 1) / 2;
  std::vector<bool> bits(nbits, false);
  for (auto [u, v] : g.edge_list()) bits[static_cast<long long>(v) * (v - 1) / 2 + u] = true;
  for (long long k = 0; k < nbits; k += 6) {
    int val = 0;
    for (int b = 0; b < 6; ++b)
      val = (val << 1) | (k + b < nbits && bits[k + b] ? 1 : 0);
    out.push_back(static_cast<char>(val + 63));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

namespace {

struct TextScanner {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("expected an integer", static_cast<long long>(pos));
    long long v = 0;
    for (size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
    return v;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
};

}  // namespace

Graph parse_adjlist(std::string_view text) {
  TextScanner sc{text};
  const long long n = sc.integer();
  if (n < 0 || n > kMaxGraph6Order)
    throw ParseError("unreasonable vertex count", 0);
  std::vector<std::vector<int>> adj(n);
  for (long long v = 0; v < n; ++v) {
    if (!sc.eat('{'))
      throw ParseError("expected '{' for vertex " + std::to_string(v + 1),
                       static_cast<long long>(sc.pos));
    if (!sc.eat('}')) {
      for (;;) {
        const long long w = sc.integer();
        if (w < 1 || w > n)
          throw ParseError("neighbor " + std::to_string(w) + " of vertex " +
                               std::to_string(v + 1) + " out of range",
                           static_cast<long long>(sc.pos));
        adj[v].push_back(static_cast<int>(w - 1));
        if (sc.eat('}')) break;
        if (!sc.eat(','))
          throw ParseError("expected ',' or '}'", static_cast<long long>(sc.pos));
      }
    }
  }
  if (!sc.done())
    throw ParseError("trailing garbage after adjacency lists",
                     static_cast<long long>(sc.pos));
  for (long long u = 0; u < n; ++u)
    for (int w : adj[u])
      if (std::find(adj[w].begin(), adj[w].end(), static_cast<int>(u)) ==
          adj[w].end())
        throw ParseError("asymmetric adjacency: vertex " + std::to_string(u + 1) +
                         " lists " + std::to_string(w + 1) +
                         " but not conversely");
  return Graph::from_adjacency(adj);
}

std::string write_adjlist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "{ ";
    bool first = true;
    for (int w : g.neighbors(v)) {
      if (!first) out << ", ";
      out << (w + 1);
      first = false;
    }
    out << " }\n";
  }
  return out.str();
}

AuditManifest parse_manifest(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  AuditManifest m;
  try {
    m.expected_count = j.at("count").get<int>();
    m.expected_order = j.at("order").get<int>();
    m.expected_degree = j.at("degree").get<int>();
    m.expected_girth = j.at("girth").get<int>();
    for (const auto& s : j.at("lambda_value_sets")) {
      std::vector<std::int64_t> vs = s.get<std::vector<std::int64_t>>();
      std::sort(vs.begin(), vs.end());
      m.lambda_value_sets.push_back(std::move(vs));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return m;
}

CorpusAudit audit_corpus(const std::vector<std::filesystem::path>& files,
                         const AuditManifest& manifest, int threads) {
  CorpusAudit audit;
  if (files.empty()) {
    audit.data_missing = true;
    return audit;
  }

  // Deterministic regardless of the caller's ordering.
  std::vector<std::filesystem::path> sorted = files;
  std::sort(sorted.begin(), sorted.end());

  for (const auto& path : sorted) {
    CorpusAudit::Entry entry;
    entry.file = path.filename().string();
    try {
      const auto graphs = read_graph6_file(path);
      if (graphs.size() != 1)
        throw ParseError("expected exactly one graph per corpus file, found " +
                         std::to_string(graphs.size()));
      const Graph& g = graphs.front();
      entry.parsed = true;
      entry.order = g.order();
      int mindeg = g.order() ? g.degree(0) : 0, maxdeg = mindeg;
      for (int v = 0; v < g.order(); ++v) {
        mindeg = std::min(mindeg, g.degree(v));
        maxdeg = std::max(maxdeg, g.degree(v));
      }
      entry.regular = mindeg == maxdeg;
      entry.degree = maxdeg;
      entry.girth = girth(g);
      entry.shape_ok = entry.order == manifest.expected_order &&
                       entry.regular &&
                       entry.degree == manifest.expected_degree &&
                       entry.girth == std::optional<int>(manifest.expected_girth);
      const auto counts = cycle_census(g, manifest.expected_girth, threads);
      for (auto c : counts) entry.lambda_multiset[c] += 1;
      entry.is_egr = entry.regular && entry.lambda_multiset.size() == 1;
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    audit.entries.push_back(std::move(entry));
  }

  std::vector<std::vector<std::int64_t>> found;
  audit.all_non_egr = true;
  int usable = 0;
  for (const auto& entry : audit.entries) {
    if (!entry.parsed || !entry.shape_ok) continue;
    ++usable;
    std::vector<std::int64_t> values;
    for (const auto& [value, edges] : entry.lambda_multiset) values.push_back(value);
    std::sort(values.begin(), values.end());
    found.push_back(std::move(values));
    if (entry.is_egr) audit.all_non_egr = false;
  }
  audit.counts_ok = usable == manifest.expected_count &&
                    static_cast<int>(audit.entries.size()) == manifest.expected_count;

  auto expected = manifest.lambda_value_sets;
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  audit.multisets_match = expected == found;
  return audit;
}

}  // namespace egr
