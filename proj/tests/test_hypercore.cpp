#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dense_oracle.hpp"
#include "fixtures.hpp"
#include "hyperrank/hypergraph.hpp"
#include "hyperrank/tensor.hpp"
#include "hyperrank/uniformize.hpp"

using namespace hyperrank;
using fixtures::one_based;

namespace {

std::set<std::string> label_set(const Hypergraph& h) {
  return {h.labels().begin(), h.labels().end()};
}

std::set<std::vector<std::string>> edge_labels(const Hypergraph& h) {
  std::set<std::vector<std::string>> out;
  for (const auto& e : h.edges()) {
    std::vector<std::string> ls;
    for (const auto& s : e.support) ls.push_back(h.label(s.node));
    std::sort(ls.begin(), ls.end());
    out.insert(ls);
  }
  return out;
}

}  // namespace

TEST(Support, CanonicalForm) {
  const Support s = make_support({4, 1, 4, 2});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (SupportSlot{1, 1}));
  EXPECT_EQ(s[2], (SupportSlot{4, 2}));
  EXPECT_EQ(support_size(s), 4u);
}

TEST(Hypergraph, RejectsBadEdges) {
  EXPECT_THROW(Hypergraph::from_edges(3, {{0}}), DomainError);
  EXPECT_THROW(Hypergraph::from_edges(3, {{0, 3}}), DomainError);
  std::vector<HyperEdge> neg = {{make_support({0, 1}), -1.0}};
  EXPECT_THROW(Hypergraph(2, neg), DomainError);
}

TEST(Hypergraph, CachesSizes) {
  const auto h = fixtures::mixed6();
  EXPECT_EQ(h.max_edge_size(), 4u);
  EXPECT_EQ(h.min_edge_size(), 2u);
  EXPECT_FALSE(h.is_uniform());
  EXPECT_EQ(h.find_label("4"), NodeIdx{3});
  EXPECT_FALSE(h.find_label("9").has_value());
}

TEST(Components, Tree5IsConnected) {
  const auto cc = connected_components(fixtures::tree5());
  ASSERT_EQ(cc.size(), 1u);
  EXPECT_EQ(cc[0].size(), 5u);
  EXPECT_TRUE(is_strongly_connected(fixtures::tree5()));
}

TEST(Components, DisjointEdges) {
  const auto h = one_based(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(connected_components(h).size(), 2u);
  EXPECT_FALSE(is_strongly_connected(h));
}

TEST(Components, EdgelessGivesSingletons) {
  const Hypergraph h(3);
  const auto cc = connected_components(h);
  ASSERT_EQ(cc.size(), 3u);
  for (const auto& c : cc) EXPECT_EQ(c.size(), 1u);
}

TEST(Lcc, PicksLargest) {
  const auto h = one_based(5, {{1, 2}, {3, 4}, {4, 5}});
  const auto l = largest_connected_component(h);
  EXPECT_EQ(label_set(l), (std::set<std::string>{"3", "4", "5"}));
  EXPECT_EQ(edge_labels(l), (std::set<std::vector<std::string>>{{"3", "4"}, {"4", "5"}}));
}

TEST(Lcc, TieGoesToSmallestLabel) {
  const auto h = Hypergraph::from_edges(4, {{0, 1}, {2, 3}}, {"10", "11", "9", "12"});
  EXPECT_EQ(label_set(largest_connected_component(h)), (std::set<std::string>{"9", "12"}));
}

TEST(Lcc, IdentityOnConnectedAndIdempotent) {
  const auto h = fixtures::tree5();
  const auto l = largest_connected_component(h);
  EXPECT_EQ(l.labels(), h.labels());
  EXPECT_EQ(l.num_edges(), h.num_edges());
  const auto g = one_based(6, {{1, 2}, {3, 4, 5}, {5, 6}});
  const auto once = largest_connected_component(g);
  const auto twice = largest_connected_component(once);
  EXPECT_EQ(once.labels(), twice.labels());
  EXPECT_EQ(edge_labels(once), edge_labels(twice));
}

TEST(OrderSlice, Tree5) {
  const auto h = fixtures::tree5();
  const auto s2 = order_slice(h, 2);
  EXPECT_EQ(label_set(s2), (std::set<std::string>{"2", "3", "4", "5"}));
  EXPECT_EQ(edge_labels(s2), (std::set<std::vector<std::string>>{{"2", "4"}, {"3", "5"}}));
  const auto s3 = order_slice(h, 3);
  EXPECT_EQ(label_set(s3), (std::set<std::string>{"1", "2", "3"}));
  EXPECT_EQ(s3.num_edges(), 1u);
  const auto s7 = order_slice(h, 7);
  EXPECT_EQ(s7.num_nodes(), 0u);
  EXPECT_EQ(s7.num_edges(), 0u);
}

TEST(Stats, Tree5) {
  const auto s = stats(fixtures::tree5());
  EXPECT_EQ(s.nodes, 5u);
  EXPECT_EQ(s.edges, 3u);
  EXPECT_EQ(s.size_histogram, (std::map<std::uint32_t, std::size_t>{{2, 2}, {3, 1}}));
  EXPECT_DOUBLE_EQ(s.lcc_fraction, 1.0);
  ASSERT_EQ(s.per_order.size(), 2u);
  EXPECT_EQ(s.per_order[0].order, 2u);
  EXPECT_EQ(s.per_order[0].nodes, 4u);
  EXPECT_EQ(s.per_order[0].lcc_nodes, 2u);
  EXPECT_EQ(s.per_order[1].edges, 1u);
}

TEST(Stats, SingleEdgeAndEmpty) {
  const auto s = stats(one_based(2, {{1, 2}}));
  EXPECT_EQ(s.nodes, 2u);
  EXPECT_EQ(s.edges, 1u);
  EXPECT_EQ(s.size_histogram, (std::map<std::uint32_t, std::size_t>{{2, 1}}));
  const auto e = stats(Hypergraph());
  EXPECT_EQ(e.edges, 0u);
  EXPECT_TRUE(e.per_order.empty());
}

TEST(Stats, SliceRowsMatchHistogram) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 12, 5, 15, false);
    const auto s = stats(h);
    for (const auto& row : s.per_order) {
      EXPECT_EQ(row.edges, s.size_histogram.at(row.order));
      EXPECT_EQ(stats(order_slice(h, row.order)).edges, row.edges);
    }
  }
}

// Union-find components agree with the components of the flattening matrix
// of the uniformized tensor.
TEST(Components, AgreeWithFlatteningGraph) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto h = oracle::random_hypergraph(rng, n, 4, 1 + rng() % 4, false);
    const auto cc = connected_components(h);
    const auto t = from_hypergraph(alternative_uniformization(h, h.max_edge_size()));
    const auto m = flattening_matrix(t);
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.at(i, j) > 0.0) uf.unite(i, j);
      }
    }
    for (const auto& comp : cc) {
      for (auto v : comp) EXPECT_EQ(uf.find(v), uf.find(comp[0]));
    }
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < n; ++v) roots.insert(uf.find(v));
    EXPECT_EQ(roots.size(), cc.size());
  }
}
