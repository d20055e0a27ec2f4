#include "hyperrank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>

#include "hyperrank/uniformize.hpp"

namespace hyperrank {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

std::int64_t parse_int(const std::string& tok, const std::string& what) {
  std::int64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw DataError(what + ": non-integer token '" + tok + "'");
  }
  return v;
}

}  // namespace

std::vector<std::int64_t> read_int_stream(std::istream& in, const std::string& what) {
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int(tok, what));
  return out;
}

std::unordered_map<std::int64_t, std::string> read_labels(std::istream& in) {
  std::unordered_map<std::int64_t, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto split = line.find_first_of("\t ");
    if (split == std::string::npos) {
      throw DataError("labels line " + std::to_string(lineno) + ": expected id<TAB>label");
    }
    const auto start = line.find_first_not_of("\t ", split);
    out[parse_int(line.substr(0, split), "labels")] =
        start == std::string::npos ? std::string{} : line.substr(start);
  }
  return out;
}

Ingested decode_simplicial(const std::vector<std::int64_t>& nverts,
                           const std::vector<std::int64_t>& simplices,
                           const std::unordered_map<std::int64_t, std::string>& labels) {
  std::int64_t total = 0;
  for (auto k : nverts) {
    if (k < 1) throw DataError("nverts entries must be positive");
    total += k;
  }
  if (static_cast<std::size_t>(total) != simplices.size()) {
    throw DataError("count mismatch: nverts sums to " + std::to_string(total) +
                    " but simplices has " + std::to_string(simplices.size()) + " ids");
  }

  IngestReport rep;
  rep.simplices = nverts.size();
  std::vector<std::vector<std::int64_t>> kept;
  std::map<std::int64_t, NodeIdx> ids;
  std::size_t pos = 0;
  for (auto k : nverts) {
    std::vector<std::int64_t> s(simplices.begin() + pos, simplices.begin() + pos + k);
    pos += k;
    for (auto v : s) ids.try_emplace(v, 0);
    std::sort(s.begin(), s.end());
    const auto last = std::unique(s.begin(), s.end());
    if (last != s.end()) {
      ++rep.simplices_with_repeats;
      s.erase(last, s.end());
    }
    if (s.size() < 2) {
      ++rep.singletons_dropped;
      continue;
    }
    kept.push_back(std::move(s));
  }

  std::map<std::int64_t, NodeIdx> used;
  for (const auto& s : kept) {
    for (auto v : s) used.try_emplace(v, 0);
  }
  rep.isolated_dropped = ids.size() - used.size();
  std::vector<std::string> names;
  names.reserve(used.size());
  for (auto& [id, idx] : used) {
    idx = static_cast<NodeIdx>(names.size());
    auto it = labels.find(id);
    names.push_back(it != labels.end() ? it->second : std::to_string(id));
  }

  std::vector<HyperEdge> edges;
  edges.reserve(kept.size());
  for (const auto& s : kept) {
    std::vector<NodeIdx> nodes;
    nodes.reserve(s.size());
    for (auto v : s) nodes.push_back(used.at(v));
    edges.push_back({make_support(nodes), 1.0});
  }
  const std::size_t before = edges.size();
  edges = merge_duplicate_supports(std::move(edges));
  rep.duplicates_merged = before - edges.size();
  rep.nodes = names.size();
  rep.edges = edges.size();
  const std::size_t n = names.size();
  return {Hypergraph(n, std::move(edges), std::move(names)), rep};
}

Ingested ingest_simplicial(const std::string& nverts_path, const std::string& simplices_path,
                           const std::optional<std::string>& labels_path) {
  auto nv_in = open_or_throw(nverts_path);
  auto sx_in = open_or_throw(simplices_path);
  const auto nverts = read_int_stream(nv_in, nverts_path);
  const auto simplices = read_int_stream(sx_in, simplices_path);
  if (nverts.empty()) throw DataError("empty file: " + nverts_path);
  if (simplices.empty()) throw DataError("empty file: " + simplices_path);
  std::unordered_map<std::int64_t, std::string> labels;
  if (labels_path) {
    auto lb_in = open_or_throw(*labels_path);
    labels = read_labels(lb_in);
  }
  return decode_simplicial(nverts, simplices, labels);
}

void print_report(std::ostream& os, const IngestReport& r) {
  os << "simplices read:        " << r.simplices << '\n'
     << "singletons dropped:    " << r.singletons_dropped << '\n'
     << "repeated ids collapsed:" << ' ' << r.simplices_with_repeats << '\n'
     << "duplicate edges merged:" << ' ' << r.duplicates_merged << '\n'
     << "isolated nodes dropped:" << ' ' << r.isolated_dropped << '\n'
     << "nodes: " << r.nodes << "  edges: " << r.edges << '\n';
}

std::string format_score(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_scores_csv(std::ostream& os, const std::vector<std::string>& labels,
                      const std::vector<double>& scores) {
  if (labels.size() != scores.size()) throw DomainError("label and score counts differ");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  os << "label,score\n";
  for (auto i : order) os << labels[i] << ',' << format_score(scores[i]) << '\n';
}

void write_stats_csv(std::ostream& os, const HypergraphStats& s) {
  os << "order,nodes,edges,lcc_nodes,lcc_percent\n";
  for (const auto& o : s.per_order) {
    os << o.order << ',' << o.nodes << ',' << o.edges << ',' << o.lcc_nodes << ','
       << format_score(100.0 * o.lcc_fraction) << '\n';
  }
}

}  // namespace hyperrank
