#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "dense_oracle.hpp"
#include "fixtures.hpp"
#include "hyperrank/tensor.hpp"
#include "hyperrank/uniformize.hpp"

using namespace hyperrank;
using fixtures::one_based;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Normalization, Tags) {
  const auto s = normalized({1.0, 3.0}, Normalization::kL1);
  EXPECT_DOUBLE_EQ(s.values[1], 0.75);
  EXPECT_EQ(to_string(s.normalization), "l1");
  EXPECT_NEAR(norm_of(normalized({3.0, 4.0}, Normalization::kL2).values, Normalization::kL2), 1.0,
              1e-12);
  EXPECT_THROW(normalized({0.0, 0.0}, Normalization::kMax), DomainError);
}

TEST(FromHypergraph, UpliftedTree5Entries) {
  const auto t = from_hypergraph(uplift(fixtures::tree5(), 3));
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(t.dim(), 6u);
  ASSERT_EQ(t.entries().size(), 3u);
  const std::vector<NodeIdx> a{0, 1, 2};
  const std::vector<NodeIdx> b{5, 3, 1};
  const std::vector<NodeIdx> c{2, 5, 4};
  EXPECT_EQ(t.component(a), 1.0);
  EXPECT_EQ(t.component(b), 1.0 / 3.0);
  EXPECT_EQ(t.component(c), 1.0 / 3.0);
  const std::vector<NodeIdx> z{0, 3, 4};
  EXPECT_EQ(t.component(z), 0.0);
}

TEST(FromHypergraph, PairIsAdjacency) {
  const auto t = from_hypergraph(one_based(2, {{1, 2}}));
  const std::vector<NodeIdx> ij{0, 1};
  const std::vector<NodeIdx> ji{1, 0};
  EXPECT_EQ(t.component(ij), 1.0);
  EXPECT_EQ(t.component(ji), 1.0);
  const auto y = hyperrank::apply(t, std::vector<double>{2.0, 5.0});
  EXPECT_EQ(y, (std::vector<double>{5.0, 2.0}));
}

TEST(FromHypergraph, MergesDuplicateSupports) {
  std::vector<HyperEdge> edges = {{make_support({0, 1}), 1.0}, {make_support({1, 0}), 2.5}};
  const auto t = from_hypergraph(Hypergraph(2, edges));
  ASSERT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.entries()[0].value, 3.5);
}

TEST(FromHypergraph, RejectsNonUniform) {
  EXPECT_THROW(from_hypergraph(fixtures::tree5()), DomainError);
}

TEST(Apply, StarEntryAllOnes) {
  const auto t = from_hypergraph(uplift(fixtures::tree5(), 3));
  const auto y = hyperrank::apply(t, std::vector<double>(6, 1.0));
  // Node 4 only lies in {2,4,*}.
  EXPECT_DOUBLE_EQ(y[3], 2.0 / 3.0);
  // Node 2 lies in {1,2,3} and {2,4,*}.
  EXPECT_DOUBLE_EQ(y[1], 2.0 + 2.0 / 3.0);
}

TEST(Apply, ZeroVector) {
  const auto t = from_hypergraph(uplift(fixtures::tree5(), 4));
  for (double v : hyperrank::apply(t, std::vector<double>(6, 0.0))) EXPECT_EQ(v, 0.0);
}

TEST(Apply, DimensionMismatch) {
  const auto t = from_hypergraph(one_based(2, {{1, 2}}));
  EXPECT_THROW(hyperrank::apply(t, std::vector<double>(3, 1.0)), DomainError);
}

TEST(Apply, Multilinear) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 7, 4, 5, true);
    const auto t = from_hypergraph(uplift(h, h.max_edge_size() + 1));
    const auto x = random_vector(rng, t.dim(), -1.0, 1.0);
    const double alpha = 1.7;
    std::vector<double> ax = x;
    for (auto& v : ax) v *= alpha;
    const auto y = hyperrank::apply(t, x);
    const auto ya = hyperrank::apply(t, ax);
    const double scale = std::pow(alpha, t.order() - 1);
    for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(ya[i], scale * y[i], 1e-12 * (1 + std::abs(ya[i])));
  }
}

TEST(Dense, UpliftedTree5Counts) {
  const auto d = oracle::densify(uplift(fixtures::tree5(), 3));
  EXPECT_EQ(d.data.size(), 216u);
  std::size_t nonzero = 0;
  for (double v : d.data) nonzero += v != 0.0;
  EXPECT_EQ(nonzero, 18u);
}

TEST(Dense, Symmetric) {
  std::mt19937_64 rng(2);
  const auto h = oracle::random_hypergraph(rng, 5, 3, 6, true);
  const auto d = oracle::densify(uplift(h, 3));
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) {
      for (std::size_t k = 0; k < d.n; ++k) {
        const double v = d.at({i, j, k});
        EXPECT_EQ(v, d.at({j, i, k}));
        EXPECT_EQ(v, d.at({k, j, i}));
        EXPECT_EQ(v, d.at({i, k, j}));
      }
    }
  }
}

TEST(Dense, SizeGuard) {
  const auto h = uplift(Hypergraph::from_edges(40, {{0, 1}}), 5);
  EXPECT_THROW(oracle::densify(h), std::invalid_argument);
}

TEST(Apply, MatchesDenseOnRandomVectors) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 6, 4, 6, false);
    const auto u = uplift(h, 4);
    const auto t = from_hypergraph(u);
    const auto d = oracle::densify(u);
    for (int r = 0; r < 100; ++r) {
      const auto x = random_vector(rng, t.dim(), -1.0, 1.0);
      EXPECT_LE(max_abs_diff(hyperrank::apply(t, x), oracle::dense_apply(d, x)), 1e-12);
    }
  }
}

TEST(Apply, ThreadCountDoesNotChangeBits) {
  std::mt19937_64 rng(41);
  std::vector<UniformTensor::Entry> edges;
  const std::size_t n = 300;
  std::uniform_int_distribution<NodeIdx> node(0, n - 1);
  for (int k = 0; k < 40000; ++k) {
    edges.push_back({make_support({node(rng), node(rng), node(rng)}), 1.0 + (k % 7)});
  }
  const UniformTensor t(3, n, std::move(edges));
  const auto x = random_vector(rng, n, 0.1, 1.0);
  setenv("HYPERRANK_THREADS", "1", 1);
  const auto y1 = hyperrank::apply(t, x);
  setenv("HYPERRANK_THREADS", "4", 1);
  const auto y4 = hyperrank::apply(t, x);
  unsetenv("HYPERRANK_THREADS");
  const auto yall = hyperrank::apply(t, x);
  EXPECT_EQ(y1, y4);
  EXPECT_EQ(y1, yall);
}

TEST(Flattening, PairIsAbsAdjacency) {
  const auto t = from_hypergraph(one_based(3, {{1, 2}, {2, 3}}));
  const auto m = flattening_matrix(t);
  EXPECT_EQ(m.at(0, 1), 1.0);
  EXPECT_EQ(m.at(1, 0), 1.0);
  EXPECT_EQ(m.at(0, 2), 0.0);
  EXPECT_TRUE(m.is_irreducible());
}

TEST(Flattening, UpliftedTree5Irreducible) {
  const auto t = from_hypergraph(uplift(fixtures::tree5(), 3));
  EXPECT_TRUE(flattening_matrix(t).is_irreducible());
  EXPECT_TRUE(is_weakly_irreducible(t));
}

TEST(Flattening, DisjointEdgesBlockDiagonal) {
  const auto t = from_hypergraph(one_based(6, {{1, 2, 3}, {4, 5, 6}}));
  const auto m = flattening_matrix(t);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 3; j < 6; ++j) {
      EXPECT_EQ(m.at(i, j), 0.0);
      EXPECT_EQ(m.at(j, i), 0.0);
    }
  }
  EXPECT_EQ(m.at(0, 1), 1.0);
  EXPECT_FALSE(m.is_irreducible());
  EXPECT_FALSE(is_weakly_irreducible(t));
}

TEST(Flattening, MatchesDense) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 3 + rng() % 4, 4, 1 + rng() % 5, false);
    const auto u = uplift(h, h.max_edge_size() + rng() % 2);
    const auto m = flattening_matrix(from_hypergraph(u));
    const auto dm = oracle::dense_flattening(oracle::densify(u));
    for (std::size_t i = 0; i < dm.size(); ++i) {
      for (std::size_t j = 0; j < dm.size(); ++j) EXPECT_EQ(m.at(i, j), dm[i][j]);
    }
  }
}

// Weak irreducibility, flattening irreducibility and strong connectedness
// agree.
TEST(Irreducibility, ThreeWayAgreement) {
  std::mt19937_64 rng(61);
  int connected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto h = oracle::random_hypergraph(rng, n, 4, 1 + rng() % 5, false);
    const auto u = alternative_uniformization(h, h.max_edge_size());
    const auto t = from_hypergraph(u);
    const bool a = is_weakly_irreducible(t);
    const bool b = flattening_matrix(t).is_irreducible();
    const bool c = is_strongly_connected(h);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    connected += c;
  }
  EXPECT_GT(connected, 10);
  EXPECT_LT(connected, 190);
}

TEST(Tensor, Guards) {
  EXPECT_THROW(UniformTensor(1, 2, {}), DomainError);
  EXPECT_THROW(UniformTensor(21, 2, {}), DomainError);
  std::vector<UniformTensor::Entry> bad = {{make_support({0, 1}), 1.0}};
  EXPECT_THROW(UniformTensor(3, 2, bad), DomainError);
}

TEST(Tensor, ScaledMultipliesValues) {
  const auto t = from_hypergraph(uplift(fixtures::tree5(), 3)).scaled(2.0);
  const std::vector<NodeIdx> a{0, 1, 2};
  EXPECT_EQ(t.component(a), 2.0);
}
