#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperrank/hypergraph.hpp"

namespace hyperrank {

enum class Normalization { kNone, kL1, kL2, kMax };

std::string_view to_string(Normalization n);

// Score vector together with the norm it was scaled to.
struct ScoreVector {
  std::vector<double> values;
  Normalization normalization = Normalization::kNone;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

double norm_of(std::span<const double> x, Normalization kind);

// Rescales x so its `kind` norm is one. Throws DomainError on a zero vector.
ScoreVector normalized(std::vector<double> x, Normalization kind);

// Symmetric order-m tensor stored as one entry per distinct support
// multiset. Every index tuple whose multiset equals an entry's support has
// that entry's value; all other components are zero.
class UniformTensor {
 public:
  struct Entry {
    Support support;
    double value = 0.0;
  };

  static constexpr std::uint32_t kMaxOrder = 20;

  UniformTensor(std::uint32_t order, std::size_t dim, std::vector<Entry> entries);

  std::uint32_t order() const { return order_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Component at an arbitrary index tuple (length must equal the order).
  double component(std::span<const NodeIdx> index) const;

  // Copy with every value multiplied by gamma.
  UniformTensor scaled(double gamma) const;

 private:
  std::uint32_t order_;
  std::size_t dim_;
  std::vector<Entry> entries_;
  // value * (m-1)! / prod(mult!) per entry, the arrangement count shared by
  // every node of the support up to its own multiplicity.
  std::vector<double> apply_coef_;

  friend std::vector<double> apply(const UniformTensor&, std::span<const double>);
};

// One entry per distinct support; duplicate supports add up. Requires a
// uniform hypergraph with positive weights.
UniformTensor from_hypergraph(const Hypergraph& h);

// y_i = sum over i_2..i_m of T[i, i_2, ..., i_m] x_{i_2} ... x_{i_m}.
// Accepts signed x. Runs on up to HYPERRANK_THREADS threads; the reduction
// order is fixed so results do not depend on the thread count.
std::vector<double> apply(const UniformTensor& t, std::span<const double> x);

// Sparse nonnegative n x n matrix, rows sorted by column.
class FlatteningMatrix {
 public:
  explicit FlatteningMatrix(std::size_t n) : rows_(n) {}

  std::size_t dim() const { return rows_.size(); }
  double at(std::size_t i, std::size_t j) const;
  const std::vector<std::pair<NodeIdx, double>>& row(std::size_t i) const { return rows_[i]; }

  // Irreducible iff the directed graph of nonzero entries is strongly
  // connected (for symmetric M: connected). A 1x1 matrix counts as
  // irreducible.
  bool is_irreducible() const;

 private:
  friend FlatteningMatrix flattening_matrix(const UniformTensor& t);
  std::vector<std::vector<std::pair<NodeIdx, double>>> rows_;
};

// m_ij = sum over j_3..j_m of |T[i, j, j_3, ..., j_m]|.
FlatteningMatrix flattening_matrix(const UniformTensor& t);

bool is_weakly_irreducible(const UniformTensor& t);

// Thread cap from HYPERRANK_THREADS (defaults to hardware concurrency).
unsigned worker_threads();

}  // namespace hyperrank
