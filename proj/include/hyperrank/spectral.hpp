#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperrank/hypergraph.hpp"
#include "hyperrank/tensor.hpp"

namespace hyperrank {

// Raised when the power iteration exhausts max_iter (CLI exit code 3). The
// best iterate is still available through h_eigen_power's result.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  double tol = 1e-10;
  std::uint64_t max_iter = 100000;
  // Diagonal shift rho added to the iteration map.
  double shift = 1.0;
  // Positive start vector. When empty the start is uniform, or drawn from
  // [0.5, 1.5) with this seed when it is nonzero.
  std::vector<double> start;
  std::uint64_t seed = 0;
  // Throw ConvergenceError instead of returning a flagged result.
  bool throw_on_failure = true;
};

// Raw output of the Perron H-eigenvector iteration over every tensor index.
struct HEigenResult {
  std::vector<double> vector;  // l1-normalized, strictly positive
  double eigenvalue = 0.0;
  double residual = 0.0;
  std::uint64_t iterations = 0;
  bool converged = false;
};

// Shifted NQZ power method for lambda c^[m-1] = T c^{m-1} on a nonnegative,
// weakly irreducible tensor. Each step maps x to
// (T x^{m-1} + rho x^[m-1])^[1/(m-1)] and renormalizes; the Collatz-Wielandt
// bounds min_i / max_i of (T x^{m-1})_i / x_i^{m-1} bracket lambda, and the
// iteration stops once they agree to a relative `tol`. The reported pair is
// the one the bounds were evaluated at.
HEigenResult h_eigen_power(const UniformTensor& t, const SolverOptions& opts = {});

struct CentralityResult {
  std::string method;  // EC, HEC(m), UHEC(m), UPHEC(p), ALT(m)
  std::vector<std::string> labels;  // real nodes, in index order
  ScoreVector scores;               // real nodes only, l1-normalized
  double eigenvalue = 0.0;
  std::vector<std::pair<std::string, double>> aux_scores;  // raw solver values
  // Real-node scores rescaled so the first auxiliary component equals one.
  std::vector<double> star_scaled;
  double residual = 0.0;
  std::uint64_t iterations = 0;
  bool converged = false;
  std::uint32_t order = 0;
};

// Options shared by the hypergraph-level pipelines.
struct CentralityOptions {
  SolverOptions solver;
  // Extra single-order uplifts applied to the uniformized hypergraph before
  // solving; each appends a fresh auxiliary node to every edge. Zero gives
  // the centrality as defined; one reproduces the reference centralities of the six-node test hypergraph.
  std::uint32_t lift_margin = 0;
};

// Perron eigenvector of a weighted graph (order-2 tensor). Throws DomainError
// when the graph is disconnected.
CentralityResult eigenvector_centrality(const UniformTensor& adjacency,
                                        const SolverOptions& opts = {});

// Standard HEC of a connected uniform hypergraph.
CentralityResult hec(const Hypergraph& h, const CentralityOptions& opts = {});

// m-UHEC: HEC of uplift(h, m), restricted to the original nodes.
CentralityResult uhec(const Hypergraph& h, std::uint32_t m, const CentralityOptions& opts = {});

// p-UPHEC: HEC of uplift_project(h, p), restricted to the original nodes.
CentralityResult uphec(const Hypergraph& h, std::uint32_t p, const CentralityOptions& opts = {});

// HEC of the alternative uniformization at order m; edges above m are first
// projected down to m.
CentralityResult alt_centrality(const Hypergraph& h, std::uint32_t m,
                                const CentralityOptions& opts = {});

// Solves an already uniform hypergraph (auxiliary nodes allowed) and packages
// the result. Used by the pipelines above.
CentralityResult solve_uniform(const Hypergraph& uniform, std::string method,
                               const CentralityOptions& opts);

// Auxiliary nodes that turn a (2+l)-uniform hypergraph into an uplifted
// graph: each appears in every edge with the same multiplicity, the
// multiplicities sum to l, and every edge minus them is a pair of distinct
// nodes. Declared auxiliary nodes are preferred, then higher indices.
std::optional<AuxSpec> detect_uplift_structure(const Hypergraph& h);

enum class ZNorm { kZ1, kZ2 };

struct ZEigenpair {
  std::vector<std::string> labels;  // every node, auxiliaries included
  ScoreVector eigenvector;
  double eigenvalue = 0.0;
  ZNorm norm = ZNorm::kZ2;
  // Perron pair of the underlying graph, with the graph vector taken as the
  // real-node part of `eigenvector`.
  double graph_eigenvalue = 0.0;
  double omega = 0.0;
  AuxSpec aux;
};

// (l+1)! / prod_k p_k!
double omega_factor(const std::vector<std::uint32_t>& p);

// Closed-form positive Z-eigenpair of a hypergraph that is an uplift of a
// connected graph. Throws DomainError when no such structure is found.
ZEigenpair z_via_uplift(const Hypergraph& h, ZNorm norm, const SolverOptions& opts = {});

struct ResidualReport {
  double residual = 0.0;         // infinity norm of the defining equation
  double norm_violation = 0.0;   // Z only: | ||c|| - 1 |
  bool pass = false;
};

// max_i |(T c^{m-1})_i - lambda c_i^{m-1}| / lambda with c scaled to unit
// max-norm, so the check does not depend on the scale of c.
ResidualReport verify_h_eigenpair(const UniformTensor& t, double lambda,
                                  const std::vector<double>& c, double tol);

// max_i |(T c^{m-1})_i - lambda c_i| plus the violation of the Z norm.
ResidualReport verify_z_eigenpair(const UniformTensor& t, double lambda,
                                  const std::vector<double>& c, ZNorm norm, double tol);

}  // namespace hyperrank
