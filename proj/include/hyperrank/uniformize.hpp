#pragma once

#include <cstdint>
#include <vector>

#include "hyperrank/hypergraph.hpp"

namespace hyperrank {

// Counts edge-touch operations performed while building a uniform
// hypergraph: one per auxiliary slot added by an uplift, and `order` per
// subset emitted by a projection.
struct OpCounter {
  std::uint64_t uplift_ops = 0;
  std::uint64_t project_ops = 0;
  std::uint64_t total() const { return uplift_ops + project_ops; }
};

// Star factor m*(m-m*)!/m! applied to an edge uplifted by m* auxiliary slots.
double star_factor(std::uint32_t order, std::uint32_t added);

// Pads every edge of size s < m with one auxiliary node of multiplicity m-s
// and multiplies its weight by star_factor(m, m-s). No node is added when the
// input is already m-uniform. Auxiliary nodes already present are treated as
// ordinary members; the new one is appended to the AuxSpec.
Hypergraph uplift(const Hypergraph& h, std::uint32_t m, OpCounter* ops = nullptr);

// Adds s = p.size() distinct auxiliary nodes, the k-th with multiplicity p[k]
// in every edge. Requires an M-uniform input with sum(p) = m - M. Edge weights
// are left untouched.
Hypergraph multi_uplift(const Hypergraph& h, std::uint32_t m,
                        const std::vector<std::uint32_t>& p);

// Replaces each edge larger than p by its C(k, p) p-subsets. A subset's
// weight is the summed weight of the larger edges containing it, plus its own
// weight when it already was an edge. Smaller edges pass through.
Hypergraph project(const Hypergraph& h, std::uint32_t p, OpCounter* ops = nullptr);

// project(h, p) followed by uplift(., p).
Hypergraph uplift_project(const Hypergraph& h, std::uint32_t p,
                          OpCounter* ops = nullptr);

// Closed-form operation count for building the order-m tensor:
// sum over uplifted edges of (m - |e|) plus sum over projected edges of
// m * C(|e|, m).
std::uint64_t expected_construction_ops(const Hypergraph& h, std::uint32_t m);

// Number of surjective index assignments of m slots onto s nodes, i.e. the
// sum over compositions k_1+..+k_s = m (k_i >= 1) of m!/(k_1!..k_s!).
double composition_weight(std::uint32_t s, std::uint32_t m);

// Spreads each edge of size s <= m over every multiset support on its nodes
// with all multiplicities >= 1 summing to m. Each support gets w(e) * s/alpha
// with alpha = composition_weight(s, m); shared supports add up.
Hypergraph alternative_uniformization(const Hypergraph& h, std::uint32_t m);

// Merges edges with identical supports by summing their weights. Edge order
// follows the first occurrence of each support.
std::vector<HyperEdge> merge_duplicate_supports(std::vector<HyperEdge> edges);

}  // namespace hyperrank
