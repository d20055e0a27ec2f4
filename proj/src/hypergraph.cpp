#include "hyperrank/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

namespace hyperrank {

Support make_support(const std::vector<NodeIdx>& nodes) {
  std::vector<NodeIdx> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  Support s;
  for (NodeIdx v : sorted) {
    if (!s.empty() && s.back().node == v) {
      ++s.back().mult;
    } else {
      s.push_back({v, 1});
    }
  }
  return s;
}

std::uint32_t support_size(const Support& s) {
  std::uint32_t total = 0;
  for (const auto& slot : s) total += slot.mult;
  return total;
}

bool HyperEdge::contains(NodeIdx v) const { return multiplicity(v) > 0; }

std::uint32_t HyperEdge::multiplicity(NodeIdx v) const {
  auto it = std::lower_bound(
      support.begin(), support.end(), v,
      [](const SupportSlot& s, NodeIdx x) { return s.node < x; });
  return (it != support.end() && it->node == v) ? it->mult : 0;
}

bool AuxSpec::contains(NodeIdx v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

Hypergraph::Hypergraph(std::size_t n, std::vector<HyperEdge> edges,
                       std::vector<std::string> labels, AuxSpec aux)
    : edges_(std::move(edges)), labels_(std::move(labels)), aux_(std::move(aux)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw DomainError("label count does not match node count");
  }
  for (NodeIdx a : aux_.nodes) {
    if (a >= n) throw DomainError("auxiliary node out of range");
  }
  if (!aux_.mult.empty() && aux_.mult.size() != aux_.nodes.size()) {
    throw DomainError("auxiliary multiplicity list has the wrong length");
  }
  bool first = true;
  for (auto& e : edges_) {
    if (e.support.empty()) throw DomainError("empty hyperedge");
    for (std::size_t k = 0; k < e.support.size(); ++k) {
      const auto& slot = e.support[k];
      if (slot.node >= n) throw DomainError("hyperedge references node out of range");
      if (slot.mult == 0) throw DomainError("zero multiplicity in hyperedge");
      if (k > 0 && e.support[k - 1].node >= slot.node) {
        throw DomainError("hyperedge support is not canonical");
      }
    }
    if (!(e.weight > 0.0)) throw DomainError("hyperedge weight must be positive");
    const std::uint32_t sz = e.size();
    if (sz < 2) throw DomainError("hyperedge of size < 2");
    max_size_ = first ? sz : std::max(max_size_, sz);
    min_size_ = first ? sz : std::min(min_size_, sz);
    first = false;
  }
}

Hypergraph Hypergraph::from_edges(std::size_t n,
                                  const std::vector<std::vector<NodeIdx>>& edges,
                                  std::vector<std::string> labels) {
  std::vector<HyperEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({make_support(e), 1.0});
  return Hypergraph(n, std::move(out), std::move(labels));
}

std::optional<NodeIdx> Hypergraph::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<NodeIdx>(i);
  }
  return std::nullopt;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

std::vector<std::vector<NodeIdx>> connected_components(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  UnionFind uf(n);
  for (const auto& e : h.edges()) {
    for (std::size_t k = 1; k < e.support.size(); ++k) {
      uf.unite(e.support[0].node, e.support[k].node);
    }
  }
  std::unordered_map<std::size_t, std::size_t> root_to_comp;
  std::vector<std::vector<NodeIdx>> comps;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = uf.find(v);
    auto [it, inserted] = root_to_comp.try_emplace(r, comps.size());
    if (inserted) comps.emplace_back();
    comps[it->second].push_back(static_cast<NodeIdx>(v));
  }
  return comps;
}

bool is_strongly_connected(const Hypergraph& h) {
  return h.num_nodes() > 0 && connected_components(h).size() == 1;
}

Hypergraph induced_subhypergraph(const Hypergraph& h,
                                 const std::vector<NodeIdx>& keep) {
  constexpr NodeIdx kAbsent = static_cast<NodeIdx>(-1);
  std::vector<NodeIdx> remap(h.num_nodes(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<NodeIdx>(i);
    labels.push_back(h.label(keep[i]));
  }
  std::vector<HyperEdge> edges;
  for (const auto& e : h.edges()) {
    HyperEdge out{{}, e.weight};
    bool inside = true;
    for (const auto& slot : e.support) {
      if (remap[slot.node] == kAbsent) {
        inside = false;
        break;
      }
      out.support.push_back({remap[slot.node], slot.mult});
    }
    if (inside) edges.push_back(std::move(out));
  }
  AuxSpec aux;
  for (std::size_t k = 0; k < h.aux().nodes.size(); ++k) {
    const NodeIdx a = h.aux().nodes[k];
    if (remap[a] == kAbsent) continue;
    aux.nodes.push_back(remap[a]);
    if (!h.aux().mult.empty()) aux.mult.push_back(h.aux().mult[k]);
  }
  return Hypergraph(keep.size(), std::move(edges), std::move(labels), std::move(aux));
}

namespace {

// Orders labels numerically when both parse as integers, lexically otherwise.
bool label_less(const std::string& a, const std::string& b) {
  long long x = 0;
  long long y = 0;
  auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
  auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
  const bool a_int = ra.ec == std::errc{} && ra.ptr == a.data() + a.size();
  const bool b_int = rb.ec == std::errc{} && rb.ptr == b.data() + b.size();
  if (a_int && b_int) return x < y;
  return a < b;
}

}  // namespace

Hypergraph largest_connected_component(const Hypergraph& h) {
  if (h.num_nodes() == 0) return h;
  auto comps = connected_components(h);
  auto min_label = [&](const std::vector<NodeIdx>& c) -> const std::string& {
    const std::string* best = &h.label(c.front());
    for (NodeIdx v : c) {
      if (label_less(h.label(v), *best)) best = &h.label(v);
    }
    return *best;
  };
  std::size_t best = 0;
  for (std::size_t k = 1; k < comps.size(); ++k) {
    if (comps[k].size() > comps[best].size() ||
        (comps[k].size() == comps[best].size() &&
         label_less(min_label(comps[k]), min_label(comps[best])))) {
      best = k;
    }
  }
  if (comps[best].size() == h.num_nodes()) return h;
  return induced_subhypergraph(h, comps[best]);
}

Hypergraph order_slice(const Hypergraph& h, std::uint32_t m) {
  if (m < 2) throw DomainError("order_slice requires m >= 2");
  std::vector<char> touched(h.num_nodes(), 0);
  for (const auto& e : h.edges()) {
    if (e.size() != m) continue;
    for (const auto& slot : e.support) touched[slot.node] = 1;
  }
  std::vector<NodeIdx> keep;
  for (std::size_t v = 0; v < h.num_nodes(); ++v) {
    if (touched[v]) keep.push_back(static_cast<NodeIdx>(v));
  }
  // Every edge inside `keep` of a different size must still be dropped.
  std::vector<HyperEdge> edges;
  for (const auto& e : h.edges()) {
    if (e.size() == m) edges.push_back(e);
  }
  Hypergraph only_m(h.num_nodes(), std::move(edges), h.labels(), h.aux());
  return induced_subhypergraph(only_m, keep);
}

HypergraphStats stats(const Hypergraph& h) {
  HypergraphStats s;
  s.nodes = h.num_nodes();
  s.edges = h.num_edges();
  for (const auto& e : h.edges()) ++s.size_histogram[e.size()];
  if (s.nodes > 0) {
    s.lcc_nodes = largest_connected_component(h).num_nodes();
    s.lcc_fraction = static_cast<double>(s.lcc_nodes) / static_cast<double>(s.nodes);
  }
  for (const auto& [order, count] : s.size_histogram) {
    if (order < 2) continue;
    Hypergraph slice = order_slice(h, order);
    OrderStats row;
    row.order = order;
    row.nodes = slice.num_nodes();
    row.edges = slice.num_edges();
    row.lcc_nodes = largest_connected_component(slice).num_nodes();
    row.lcc_fraction = row.nodes ? static_cast<double>(row.lcc_nodes) / row.nodes : 0.0;
    s.per_order.push_back(row);
  }
  return s;
}

}  // namespace hyperrank
