#pragma once

#include <string>
#include <vector>

#include "hyperrank/hypergraph.hpp"

namespace fixtures {

using hyperrank::Hypergraph;
using hyperrank::NodeIdx;

// Nodes labelled "1".."n"; edges given with 1-based ids.
inline Hypergraph one_based(std::size_t n, const std::vector<std::vector<NodeIdx>>& edges) {
  std::vector<std::vector<NodeIdx>> zero;
  for (const auto& e : edges) {
    auto& z = zero.emplace_back();
    for (auto v : e) z.push_back(v - 1);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Hypergraph::from_edges(n, zero, labels);
}

// {1,2,3},{2,4},{3,5}
inline Hypergraph tree5() { return one_based(5, {{1, 2, 3}, {2, 4}, {3, 5}}); }

// {1,2},{2,3,4,5},{4,5,6}
inline Hypergraph mixed6() { return one_based(6, {{1, 2}, {2, 3, 4, 5}, {4, 5, 6}}); }

// Path 1-2-3 uplifted to order 5 by "*" once and "x" twice, given as plain
// nodes so the auxiliary structure has to be detected.
inline Hypergraph lifted_path() {
  using hyperrank::HyperEdge;
  using hyperrank::make_support;
  std::vector<HyperEdge> edges = {
      {make_support({0, 1, 3, 4, 4}), 1.0},
      {make_support({1, 2, 3, 4, 4}), 1.0},
  };
  return Hypergraph(5, edges, {"1", "2", "3", "*", "x"});
}

// Reference UPHEC scores of mixed6() for p = 2, 3, 4, nodes 1..6, four decimals.
inline const std::vector<std::vector<double>>& reference_rows() {
  static const std::vector<std::vector<double>> rows = {
      {0.0929, 0.1802, 0.1690, 0.2084, 0.2084, 0.1412},
      {0.0623, 0.1949, 0.1943, 0.2060, 0.2060, 0.1364},
      {0.0853, 0.1959, 0.1953, 0.1993, 0.1993, 0.1250},
  };
  return rows;
}

}  // namespace fixtures
