#include "hyperrank/uniformize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace hyperrank {

namespace {

double factorial(std::uint32_t k) {
  double f = 1.0;
  for (std::uint32_t i = 2; i <= k; ++i) f *= i;
  return f;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_simple(const HyperEdge& e, const char* op) {
  for (const auto& slot : e.support) {
    if (slot.mult != 1) {
      throw DomainError(std::string(op) + ": input edges must be plain sets");
    }
  }
}

// Calls fn(subset) for every p-subset of the (simple) support, in
// lexicographic order.
template <typename Fn>
void for_each_subset(const Support& s, std::uint32_t p, Fn&& fn) {
  const std::size_t k = s.size();
  std::vector<std::size_t> idx(p);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Support sub(p);
  while (true) {
    for (std::uint32_t j = 0; j < p; ++j) sub[j] = {s[idx[j]].node, 1};
    fn(sub);
    std::size_t j = p;
    while (j > 0 && idx[j - 1] == k - p + (j - 1)) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < p; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Calls fn(parts) for every composition of m into parts.size() positive
// parts, in lexicographic order.
template <typename Fn>
void compositions_rec(std::vector<std::uint32_t>& parts, std::size_t pos,
                      std::uint32_t remaining, Fn& fn) {
  const std::size_t slots_left = parts.size() - pos;
  if (slots_left == 1) {
    parts[pos] = remaining;
    fn(parts);
    return;
  }
  for (std::uint32_t k = 1; k + (slots_left - 1) <= remaining; ++k) {
    parts[pos] = k;
    compositions_rec(parts, pos + 1, remaining - k, fn);
  }
}

template <typename Fn>
void for_each_composition(std::uint32_t s, std::uint32_t m, Fn&& fn) {
  if (s == 0 || m < s) return;
  std::vector<std::uint32_t> parts(s, 1);
  compositions_rec(parts, 0, m, fn);
}

}  // namespace

double star_factor(std::uint32_t order, std::uint32_t added) {
  if (added == 0) return 1.0;
  return added * factorial(order - added) / factorial(order);
}

std::vector<HyperEdge> merge_duplicate_supports(std::vector<HyperEdge> edges) {
  std::map<Support, std::size_t> seen;
  std::vector<HyperEdge> out;
  out.reserve(edges.size());
  for (auto& e : edges) {
    auto [it, inserted] = seen.try_emplace(e.support, out.size());
    if (inserted) {
      out.push_back(std::move(e));
    } else {
      out[it->second].weight += e.weight;
    }
  }
  return out;
}

Hypergraph uplift(const Hypergraph& h, std::uint32_t m, OpCounter* ops) {
  if (m < h.max_edge_size()) throw DomainError("cannot uplift below max edge size");
  if (m < 2) throw DomainError("uplift order must be >= 2");
  bool needs_star = false;
  for (const auto& e : h.edges()) needs_star = needs_star || e.size() < m;
  if (!needs_star) return h;

  const auto star = static_cast<NodeIdx>(h.num_nodes());
  std::vector<HyperEdge> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    const std::uint32_t added = m - e.size();
    HyperEdge out = e;
    if (added > 0) {
      out.support.push_back({star, added});
      out.weight *= star_factor(m, added);
      if (ops) ops->uplift_ops += added;
    }
    edges.push_back(std::move(out));
  }
  std::vector<std::string> labels = h.labels();
  labels.push_back(h.aux().empty() ? std::string("*")
                                   : "*" + std::to_string(h.aux().nodes.size() + 1));
  AuxSpec aux = h.aux();
  aux.nodes.push_back(star);
  aux.mult.clear();
  return Hypergraph(h.num_nodes() + 1, std::move(edges), std::move(labels), std::move(aux));
}

Hypergraph multi_uplift(const Hypergraph& h, std::uint32_t m,
                        const std::vector<std::uint32_t>& p) {
  if (!h.is_uniform() || h.num_edges() == 0) {
    throw DomainError("multi_uplift requires a non-empty uniform hypergraph");
  }
  const std::uint32_t M = h.max_edge_size();
  if (m <= M) throw DomainError("multi_uplift requires m > M");
  if (p.empty() || std::any_of(p.begin(), p.end(), [](auto v) { return v == 0; })) {
    throw DomainError("multi_uplift multiplicities must be positive");
  }
  if (std::accumulate(p.begin(), p.end(), std::uint32_t{0}) != m - M) {
    throw DomainError("multi_uplift multiplicities must sum to m - M");
  }
  const auto first = static_cast<NodeIdx>(h.num_nodes());
  std::vector<HyperEdge> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    HyperEdge out = e;
    for (std::size_t k = 0; k < p.size(); ++k) {
      out.support.push_back({static_cast<NodeIdx>(first + k), p[k]});
    }
    edges.push_back(std::move(out));
  }
  std::vector<std::string> labels = h.labels();
  AuxSpec aux;
  for (std::size_t k = 0; k < p.size(); ++k) {
    labels.push_back("*" + std::to_string(k + 1));
    aux.nodes.push_back(static_cast<NodeIdx>(first + k));
    aux.mult.push_back(p[k]);
  }
  return Hypergraph(h.num_nodes() + p.size(), std::move(edges), std::move(labels),
                    std::move(aux));
}

Hypergraph project(const Hypergraph& h, std::uint32_t p, OpCounter* ops) {
  if (p < 2) throw DomainError("projection order must be >= 2");
  if (h.max_edge_size() <= p) return h;
  std::vector<HyperEdge> edges;
  for (const auto& e : h.edges()) {
    if (e.size() <= p) {
      edges.push_back(e);
      continue;
    }
    require_simple(e, "project");
    for_each_subset(e.support, p, [&](const Support& sub) {
      edges.push_back({sub, e.weight});
      if (ops) ops->project_ops += p;
    });
  }
  return Hypergraph(h.num_nodes(), merge_duplicate_supports(std::move(edges)), h.labels(),
                    h.aux());
}

Hypergraph uplift_project(const Hypergraph& h, std::uint32_t p, OpCounter* ops) {
  if (p < 2 || p > h.max_edge_size()) {
    throw DomainError("uplift_project requires 2 <= p <= max edge size");
  }
  return uplift(project(h, p, ops), p, ops);
}

std::uint64_t expected_construction_ops(const Hypergraph& h, std::uint32_t m) {
  std::uint64_t total = 0;
  for (const auto& e : h.edges()) {
    const std::uint32_t s = e.size();
    if (s < m) total += m - s;
    if (s > m) total += static_cast<std::uint64_t>(m) * binomial(s, m);
  }
  return total;
}

double composition_weight(std::uint32_t s, std::uint32_t m) {
  // Surjections onto s labelled nodes: sum_j (-1)^j C(s,j) (s-j)^m.
  double total = 0.0;
  for (std::uint32_t j = 0; j <= s; ++j) {
    const double term = static_cast<double>(binomial(s, j)) * std::pow(double(s - j), double(m));
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Hypergraph alternative_uniformization(const Hypergraph& h, std::uint32_t m) {
  if (m < h.max_edge_size()) throw DomainError("cannot uniformize below max edge size");
  std::vector<HyperEdge> edges;
  for (const auto& e : h.edges()) {
    require_simple(e, "alternative_uniformization");
    const auto s = static_cast<std::uint32_t>(e.support.size());
    const double value = e.weight * s / composition_weight(s, m);
    for_each_composition(s, m, [&](const std::vector<std::uint32_t>& parts) {
      Support sup = e.support;
      for (std::uint32_t j = 0; j < s; ++j) sup[j].mult = parts[j];
      edges.push_back({std::move(sup), value});
    });
  }
  return Hypergraph(h.num_nodes(), merge_duplicate_supports(std::move(edges)), h.labels(),
                    h.aux());
}

}  // namespace hyperrank
