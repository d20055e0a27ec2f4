#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperrank/hypergraph.hpp"
#include "hyperrank/spectral.hpp"

namespace hyperrank {

struct IngestReport {
  std::size_t simplices = 0;
  std::size_t singletons_dropped = 0;
  std::size_t simplices_with_repeats = 0;  // repeated ids collapsed
  std::size_t duplicates_merged = 0;
  std::size_t isolated_dropped = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

struct Ingested {
  Hypergraph graph;
  IngestReport report;
};

// Whitespace separated integers. Throws DataError naming `what` on a
// non-integer token.
std::vector<std::int64_t> read_int_stream(std::istream& in, const std::string& what);

// id<TAB>label lines; blank lines are skipped.
std::unordered_map<std::int64_t, std::string> read_labels(std::istream& in);

// Decodes a simplex list and applies the preprocessing pipeline. Nodes are
// indexed in ascending id order; labels default to the id.
Ingested decode_simplicial(const std::vector<std::int64_t>& nverts,
                           const std::vector<std::int64_t>& simplices,
                           const std::unordered_map<std::int64_t, std::string>& labels = {});

Ingested ingest_simplicial(const std::string& nverts_path, const std::string& simplices_path,
                           const std::optional<std::string>& labels_path = std::nullopt);

void print_report(std::ostream& os, const IngestReport& r);

// 12 significant digits; "nan" for NaN.
std::string format_score(double v);

// label,score rows sorted by descending score (ties keep index order).
void write_scores_csv(std::ostream& os, const std::vector<std::string>& labels,
                      const std::vector<double>& scores);

void write_stats_csv(std::ostream& os, const HypergraphStats& s);

}  // namespace hyperrank
