#ifndef EGR_INGEST_HPP
#define EGR_INGEST_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "egr/census.hpp"
#include "egr/graph.hpp"

namespace egr {

// One graph6 record (optionally with the ">>graph6<<" header). Strict:
// every byte must lie in [63,126], the bit field must be complete, padding
// bits must be zero, and nothing may follow. ParseError carries the byte
// offset of the offending character.
Graph parse_graph6(std::string_view bytes);

// Canonical graph6 bytes for the labeled graph; the exact inverse of
// parse_graph6. Supports n up to 258047.
std::string write_graph6(const Graph& g);

// One graph6 record per line; blank lines are skipped.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

// Adjacency-list text: a vertex count, then one brace-delimited,
// comma-separated set of 1-based neighbors per vertex. Rejects asymmetric
// lists, naming the offending pair.
Graph parse_adjlist(std::string_view text);
std::string write_adjlist(const Graph& g);

// The embedded 32-vertex reference adjacency list (see fixture_special32.cpp).
std::string_view special32_fixture();

struct AuditManifest {
  int expected_count = 0;
  int expected_order = 0;
  int expected_degree = 0;
  int expected_girth = 0;
  // For each corpus graph, the set of distinct per-edge girth-cycle counts
  // it is expected to produce; compared as an unordered collection.
  std::vector<std::vector<std::int64_t>> lambda_value_sets;
};

// Manifest in JSON form, e.g.
//   {"count":4, "order":30, "degree":5, "girth":5,
//    "lambda_value_sets":[[12,14],[12,13,14],[12,14],[12,13,16]]}
AuditManifest parse_manifest(std::string_view json_text);

struct CorpusAudit {
  struct Entry {
    std::string file;
    bool parsed = false;
    std::string error;  // parse failure, if any
    int order = 0;
    bool regular = false;
    int degree = 0;
    std::optional<int> girth;
    std::map<std::int64_t, std::int64_t> lambda_multiset;
    bool is_egr = false;
    bool shape_ok = false;  // order/degree/girth match the manifest
  };
  bool data_missing = false;   // no corpus files were supplied
  std::vector<Entry> entries;
  bool counts_ok = false;      // right number of usable graphs
  bool multisets_match = false;  // λ value sets equal the manifest's, as a multiset
  bool all_non_egr = false;
  bool passed() const {
    return !data_missing && counts_ok && multisets_match && all_non_egr;
  }
};

// Audits operator-supplied graph6 files against the manifest. Per-file parse
// errors are reported and the audit continues; the result is independent of
// the file order.
CorpusAudit audit_corpus(const std::vector<std::filesystem::path>& files,
                         const AuditManifest& manifest, int threads = 1);

}  // namespace egr

#endif
