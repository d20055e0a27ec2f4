#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperrank {

using NodeIdx = std::uint32_t;

// Raised on malformed input data (exit code 2 in the CLI).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation is called outside its domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One (node, multiplicity) slot of a multiset support.
struct SupportSlot {
  NodeIdx node = 0;
  std::uint32_t mult = 1;

  friend bool operator==(const SupportSlot&, const SupportSlot&) = default;
  friend auto operator<=>(const SupportSlot&, const SupportSlot&) = default;
};

// Multiset of nodes, kept sorted by node index with no repeated node.
using Support = std::vector<SupportSlot>;

// Builds a canonical support from a plain node list; repeated ids raise
// their multiplicity.
Support make_support(const std::vector<NodeIdx>& nodes);

// Total size m(e) of a support (sum of multiplicities).
std::uint32_t support_size(const Support& s);

struct HyperEdge {
  Support support;
  // For input hypergraphs this is w(e); after uniformization it is the
  // tensor component value of every index tuple with this support.
  double weight = 1.0;

  std::uint32_t size() const { return support_size(support); }
  bool contains(NodeIdx v) const;
  std::uint32_t multiplicity(NodeIdx v) const;
};

// Auxiliary nodes introduced by an uplift. `mult` holds the per-edge
// multiplicity p_k when it is the same in every edge; the single-star uplift
// leaves it empty because the multiplicity varies by edge.
struct AuxSpec {
  std::vector<NodeIdx> nodes;
  std::vector<std::uint32_t> mult;

  bool empty() const { return nodes.empty(); }
  bool contains(NodeIdx v) const;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  // Nodes are 0..n-1. Labels default to the decimal index.
  explicit Hypergraph(std::size_t n, std::vector<HyperEdge> edges = {},
                      std::vector<std::string> labels = {}, AuxSpec aux = {});

  // Convenience builder for plain (set) hyperedges given by node indices.
  static Hypergraph from_edges(std::size_t n,
                               const std::vector<std::vector<NodeIdx>>& edges,
                               std::vector<std::string> labels = {});

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeIdx v) const { return labels_.at(v); }
  const AuxSpec& aux() const { return aux_; }
  bool is_aux(NodeIdx v) const { return aux_.contains(v); }

  // Max edge size M (0 for an edgeless hypergraph).
  std::uint32_t max_edge_size() const { return max_size_; }
  std::uint32_t min_edge_size() const { return min_size_; }
  bool is_uniform() const { return edges_.empty() || min_size_ == max_size_; }

  // Number of non-auxiliary nodes.
  std::size_t num_real_nodes() const { return num_nodes() - aux_.nodes.size(); }

  // Index of the node with the given label, if any.
  std::optional<NodeIdx> find_label(const std::string& label) const;

 private:
  std::vector<HyperEdge> edges_;
  std::vector<std::string> labels_;
  AuxSpec aux_;
  std::uint32_t max_size_ = 0;
  std::uint32_t min_size_ = 0;
};

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t component_size(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Components ordered by their smallest node index; nodes inside a component
// are sorted ascending. Isolated nodes form singletons.
std::vector<std::vector<NodeIdx>> connected_components(const Hypergraph& h);

bool is_strongly_connected(const Hypergraph& h);

// Sub-hypergraph induced by `keep` (sorted node indices): edges lying fully
// inside are kept, indices are re-densified and labels carried over.
Hypergraph induced_subhypergraph(const Hypergraph& h,
                                 const std::vector<NodeIdx>& keep);

// Ties between equally large components go to the one whose smallest label
// (compared numerically when both labels are integers) is smallest.
Hypergraph largest_connected_component(const Hypergraph& h);

// Edges of size exactly m, restricted to the nodes they touch.
Hypergraph order_slice(const Hypergraph& h, std::uint32_t m);

struct OrderStats {
  std::uint32_t order = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t lcc_nodes = 0;
  double lcc_fraction = 0.0;
};

struct HypergraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::map<std::uint32_t, std::size_t> size_histogram;
  std::size_t lcc_nodes = 0;
  double lcc_fraction = 0.0;
  std::vector<OrderStats> per_order;
};

HypergraphStats stats(const Hypergraph& h);

}  // namespace hyperrank
