#include "hyperrank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "hyperrank/uniformize.hpp"

namespace hyperrank {

namespace {

double ipow(double base, std::uint32_t e) {
  double r = 1.0;
  for (std::uint32_t k = 0; k < e; ++k) r *= base;
  return r;
}

void scale_to_max_one(std::vector<double>& x) {
  double mx = 0.0;
  for (double v : x) mx = std::max(mx, std::abs(v));
  if (mx > 0.0) {
    for (double& v : x) v /= mx;
  }
}

void require_connected(const Hypergraph& h) {
  if (!is_strongly_connected(h)) {
    throw DomainError(
        "hypergraph is not connected; extract the largest connected component (--lcc)");
  }
}

std::string tagged(const char* name, std::uint32_t order) {
  return std::string(name) + "(" + std::to_string(order) + ")";
}

}  // namespace

HEigenResult h_eigen_power(const UniformTensor& t, const SolverOptions& opts) {
  const std::size_t n = t.dim();
  const std::uint32_t m = t.order();
  if (!is_weakly_irreducible(t)) {
    throw DomainError("tensor is not weakly irreducible (hypergraph not connected)");
  }
  std::vector<double> x = opts.start;
  if (x.empty() && opts.seed != 0) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> d(0.5, 1.5);
    x.resize(n);
    for (double& v : x) v = d(rng);
  } else if (x.empty()) {
    x.assign(n, 1.0);
  } else if (x.size() != n) {
    throw DomainError("start vector length differs from tensor dimension");
  } else if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0.0); })) {
    throw DomainError("start vector must be strictly positive");
  }
  scale_to_max_one(x);

  const double root = 1.0 / static_cast<double>(m - 1);
  HEigenResult out;
  std::vector<double> y;
  for (std::uint64_t it = 0; it <= opts.max_iter; ++it) {
    y = hyperrank::apply(t, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio = y[i] / ipow(x[i], m - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.iterations = it;
    out.eigenvalue = 0.5 * (lo + hi);
    if (hi > 0.0 && (hi - lo) <= opts.tol * hi) {
      out.converged = true;
      break;
    }
    if (it == opts.max_iter) break;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::pow(y[i] + opts.shift * ipow(x[i], m - 1), root);
    }
    scale_to_max_one(x);
  }
  out.residual = verify_h_eigenpair(t, out.eigenvalue, x, opts.tol).residual;
  out.vector = normalized(std::move(x), Normalization::kL1).values;
  return out;
}

CentralityResult solve_uniform(const Hypergraph& uniform, std::string method,
                               const CentralityOptions& opts) {
  Hypergraph lifted = uniform;
  for (std::uint32_t k = 0; k < opts.lift_margin; ++k) {
    lifted = uplift(lifted, lifted.max_edge_size() + 1);
  }
  require_connected(lifted);
  const UniformTensor t = from_hypergraph(lifted);
  HEigenResult eig = h_eigen_power(t, opts.solver);
  if (!eig.converged && opts.solver.throw_on_failure) {
    throw ConvergenceError(method + ": power iteration did not converge after " +
                           std::to_string(eig.iterations) + " iterations");
  }

  CentralityResult res;
  res.method = std::move(method);
  res.order = t.order();
  res.eigenvalue = eig.eigenvalue;
  res.residual = eig.residual;
  res.iterations = eig.iterations;
  res.converged = eig.converged;
  std::vector<double> real;
  for (std::size_t v = 0; v < lifted.num_nodes(); ++v) {
    const auto idx = static_cast<NodeIdx>(v);
    if (lifted.is_aux(idx)) {
      res.aux_scores.emplace_back(lifted.label(idx), eig.vector[v]);
    } else {
      res.labels.push_back(lifted.label(idx));
      real.push_back(eig.vector[v]);
    }
  }
  if (!res.aux_scores.empty()) {
    const double star = res.aux_scores.front().second;
    res.star_scaled.reserve(real.size());
    for (double v : real) res.star_scaled.push_back(v / star);
  }
  res.scores = normalized(std::move(real), Normalization::kL1);
  return res;
}

CentralityResult eigenvector_centrality(const UniformTensor& adjacency,
                                        const SolverOptions& opts) {
  if (adjacency.order() != 2) throw DomainError("eigenvector centrality needs an order-2 tensor");
  if (!is_weakly_irreducible(adjacency)) {
    throw DomainError("graph is not connected; extract the largest connected component (--lcc)");
  }
  HEigenResult eig = h_eigen_power(adjacency, opts);
  if (!eig.converged && opts.throw_on_failure) {
    throw ConvergenceError("EC: power iteration did not converge");
  }
  CentralityResult res;
  res.method = "EC";
  res.order = 2;
  res.eigenvalue = eig.eigenvalue;
  res.residual = eig.residual;
  res.iterations = eig.iterations;
  res.converged = eig.converged;
  for (std::size_t v = 0; v < adjacency.dim(); ++v) res.labels.push_back(std::to_string(v));
  res.scores = normalized(std::move(eig.vector), Normalization::kL1);
  return res;
}

CentralityResult hec(const Hypergraph& h, const CentralityOptions& opts) {
  if (!h.is_uniform() || h.num_edges() == 0) {
    throw DomainError("HEC requires a non-empty uniform hypergraph");
  }
  require_connected(h);
  return solve_uniform(h, tagged("HEC", h.max_edge_size()), opts);
}

CentralityResult uhec(const Hypergraph& h, std::uint32_t m, const CentralityOptions& opts) {
  require_connected(h);
  return solve_uniform(uplift(h, m), tagged("UHEC", m), opts);
}

CentralityResult uphec(const Hypergraph& h, std::uint32_t p, const CentralityOptions& opts) {
  require_connected(h);
  return solve_uniform(uplift_project(h, p), tagged("UPHEC", p), opts);
}

CentralityResult alt_centrality(const Hypergraph& h, std::uint32_t m,
                                const CentralityOptions& opts) {
  if (m < 2) throw DomainError("alternative uniformization order must be >= 2");
  require_connected(h);
  return solve_uniform(alternative_uniformization(project(h, m), m), tagged("ALT", m), opts);
}

std::optional<AuxSpec> detect_uplift_structure(const Hypergraph& h) {
  if (h.num_edges() == 0 || !h.is_uniform() || h.max_edge_size() < 3) return std::nullopt;
  const std::uint32_t l = h.max_edge_size() - 2;

  // Nodes carried by every edge with one common multiplicity.
  std::vector<SupportSlot> common;
  for (const auto& slot : h.edges().front().support) {
    const bool everywhere = std::all_of(h.edges().begin(), h.edges().end(), [&](const HyperEdge& e) {
      return e.multiplicity(slot.node) == slot.mult;
    });
    if (everywhere && slot.mult <= l) common.push_back(slot);
  }
  std::stable_sort(common.begin(), common.end(), [&](const SupportSlot& a, const SupportSlot& b) {
    const bool aa = h.is_aux(a.node);
    const bool ba = h.is_aux(b.node);
    if (aa != ba) return aa;
    return a.node > b.node;
  });

  std::vector<char> chosen(common.size(), 0);
  auto remainder_is_pair = [&]() {
    for (const auto& e : h.edges()) {
      std::uint32_t left = 0;
      for (const auto& slot : e.support) {
        bool taken = false;
        for (std::size_t k = 0; k < common.size(); ++k) {
          if (chosen[k] && common[k].node == slot.node) taken = true;
        }
        if (taken) continue;
        if (slot.mult != 1) return false;
        ++left;
      }
      if (left != 2) return false;
    }
    return true;
  };
  std::function<bool(std::size_t, std::uint32_t)> search = [&](std::size_t k,
                                                               std::uint32_t need) -> bool {
    if (need == 0) return remainder_is_pair();
    if (k == common.size()) return false;
    if (common[k].mult <= need) {
      chosen[k] = 1;
      if (search(k + 1, need - common[k].mult)) return true;
      chosen[k] = 0;
    }
    return search(k + 1, need);
  };
  if (!search(0, l)) return std::nullopt;

  std::vector<SupportSlot> picked;
  for (std::size_t k = 0; k < common.size(); ++k) {
    if (chosen[k]) picked.push_back(common[k]);
  }
  std::sort(picked.begin(), picked.end());
  AuxSpec aux;
  for (const auto& s : picked) {
    aux.nodes.push_back(s.node);
    aux.mult.push_back(s.mult);
  }
  return aux;
}

double omega_factor(const std::vector<std::uint32_t>& p) {
  const std::uint32_t l = std::accumulate(p.begin(), p.end(), std::uint32_t{0});
  double num = 1.0;
  for (std::uint32_t k = 2; k <= l + 1; ++k) num *= k;
  double den = 1.0;
  for (std::uint32_t pk : p) {
    for (std::uint32_t k = 2; k <= pk; ++k) den *= k;
  }
  return num / den;
}

ZEigenpair z_via_uplift(const Hypergraph& h, ZNorm norm, const SolverOptions& opts) {
  const auto aux = detect_uplift_structure(h);
  if (!aux) {
    throw DomainError("not an uplift of a pairwise graph; general ZEC out of scope");
  }
  const std::size_t n = h.num_nodes();
  constexpr NodeIdx kAux = static_cast<NodeIdx>(-1);
  std::vector<NodeIdx> graph_index(n, 0);
  for (NodeIdx a : aux->nodes) graph_index[a] = kAux;
  std::vector<NodeIdx> real_nodes;
  for (std::size_t v = 0; v < n; ++v) {
    if (graph_index[v] == kAux) continue;
    graph_index[v] = static_cast<NodeIdx>(real_nodes.size());
    real_nodes.push_back(static_cast<NodeIdx>(v));
  }

  std::vector<HyperEdge> pairs;
  pairs.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    std::vector<NodeIdx> ends;
    for (const auto& slot : e.support) {
      if (graph_index[slot.node] != kAux) ends.push_back(graph_index[slot.node]);
    }
    pairs.push_back({make_support(ends), e.weight});
  }
  const Hypergraph graph(real_nodes.size(), merge_duplicate_supports(std::move(pairs)));
  if (!is_strongly_connected(graph)) {
    throw DomainError("underlying pairwise graph is not connected");
  }
  const UniformTensor adjacency = from_hypergraph(graph);

  SolverOptions graph_opts = opts;
  graph_opts.tol = std::min(opts.tol, 1e-14);
  graph_opts.max_iter = std::max<std::uint64_t>(opts.max_iter, 1000000);
  const HEigenResult eig = h_eigen_power(adjacency, graph_opts);
  if (!eig.converged && opts.throw_on_failure) {
    throw ConvergenceError("ZEC: graph power iteration did not converge");
  }
  const double lambda = eig.eigenvalue;
  const std::vector<double>& c = eig.vector;

  // Sum over graph edges of w_ij c_i c_j, i.e. c^T A c / 2.
  double edge_sum = 0.0;
  for (const auto& e : adjacency.entries()) {
    edge_sum += e.value * c[e.support[0].node] * c[e.support[1].node];
  }

  std::vector<double> full(n, 0.0);
  for (std::size_t g = 0; g < real_nodes.size(); ++g) full[real_nodes[g]] = c[g];
  for (std::size_t k = 0; k < aux->nodes.size(); ++k) {
    full[aux->nodes[k]] = std::sqrt(aux->mult[k] * edge_sum / lambda);
  }

  ZEigenpair out;
  out.labels = h.labels();
  out.norm = norm;
  out.aux = *aux;
  out.eigenvector =
      normalized(std::move(full), norm == ZNorm::kZ1 ? Normalization::kL1 : Normalization::kL2);
  out.graph_eigenvalue = lambda;
  out.omega = omega_factor(aux->mult);
  double prod = 1.0;
  for (std::size_t k = 0; k < aux->nodes.size(); ++k) {
    prod *= ipow(out.eigenvector[aux->nodes[k]], aux->mult[k]);
  }
  out.eigenvalue = lambda * out.omega * prod;
  return out;
}

ResidualReport verify_h_eigenpair(const UniformTensor& t, double lambda,
                                  const std::vector<double>& c, double tol) {
  if (c.size() != t.dim()) throw DomainError("eigenvector length differs from tensor dimension");
  std::vector<double> x = c;
  scale_to_max_one(x);
  const std::vector<double> y = hyperrank::apply(t, x);
  ResidualReport rep;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rep.residual = std::max(rep.residual, std::abs(y[i] - lambda * ipow(x[i], t.order() - 1)));
  }
  rep.residual /= std::abs(lambda);
  rep.pass = rep.residual <= tol;
  return rep;
}

ResidualReport verify_z_eigenpair(const UniformTensor& t, double lambda,
                                  const std::vector<double>& c, ZNorm norm, double tol) {
  if (c.size() != t.dim()) throw DomainError("eigenvector length differs from tensor dimension");
  const std::vector<double> y = hyperrank::apply(t, c);
  ResidualReport rep;
  for (std::size_t i = 0; i < c.size(); ++i) {
    rep.residual = std::max(rep.residual, std::abs(y[i] - lambda * c[i]));
  }
  const double nrm = norm_of(c, norm == ZNorm::kZ1 ? Normalization::kL1 : Normalization::kL2);
  rep.norm_violation = std::abs(nrm - 1.0);
  rep.pass = rep.residual <= tol && rep.norm_violation <= tol;
  return rep;
}

}  // namespace hyperrank
