#include "hyperrank/tensor.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>

#include "hyperrank/exact_sum.hpp"

namespace hyperrank {

namespace {

constexpr std::array<std::uint64_t, UniformTensor::kMaxOrder + 1> kIntFactorial = [] {
  std::array<std::uint64_t, UniformTensor::kMaxOrder + 1> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

constexpr std::array<double, UniformTensor::kMaxOrder + 1> kFactorial = [] {
  std::array<double, UniformTensor::kMaxOrder + 1> f{};
  f[0] = 1.0;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
  return f;
}();

// Entries per reduction chunk. Fixed so the summation order is independent
// of the number of threads.
constexpr std::size_t kChunk = 8192;

void apply_range(const std::vector<UniformTensor::Entry>& entries,
                 const std::vector<double>& coef, std::size_t begin, std::size_t end,
                 std::span<const double> x, std::vector<double>& y) {
  std::array<double, UniformTensor::kMaxOrder + 1> full{};
  std::array<double, UniformTensor::kMaxOrder + 1> suffix{};
  for (std::size_t k = begin; k < end; ++k) {
    const Support& s = entries[k].support;
    const std::size_t len = s.size();
    for (std::size_t j = 0; j < len; ++j) {
      double p = 1.0;
      for (std::uint32_t r = 0; r < s[j].mult; ++r) p *= x[s[j].node];
      full[j] = p;
    }
    suffix[len] = 1.0;
    for (std::size_t j = len; j-- > 0;) suffix[j] = suffix[j + 1] * full[j];
    double prefix = 1.0;
    for (std::size_t j = 0; j < len; ++j) {
      double reduced = 1.0;
      for (std::uint32_t r = 1; r < s[j].mult; ++r) reduced *= x[s[j].node];
      y[s[j].node] += coef[k] * s[j].mult * reduced * prefix * suffix[j + 1];
      prefix *= full[j];
    }
  }
}

}  // namespace

std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::kNone: return "none";
    case Normalization::kL1: return "l1";
    case Normalization::kL2: return "l2";
    case Normalization::kMax: return "max";
  }
  return "none";
}

double norm_of(std::span<const double> x, Normalization kind) {
  double acc = 0.0;
  switch (kind) {
    case Normalization::kNone: return 1.0;
    case Normalization::kL1:
      for (double v : x) acc += std::abs(v);
      return acc;
    case Normalization::kL2:
      for (double v : x) acc += v * v;
      return std::sqrt(acc);
    case Normalization::kMax:
      for (double v : x) acc = std::max(acc, std::abs(v));
      return acc;
  }
  return acc;
}

ScoreVector normalized(std::vector<double> x, Normalization kind) {
  const double nrm = norm_of(x, kind);
  if (!(nrm > 0.0)) throw DomainError("cannot normalize a zero vector");
  for (double& v : x) v /= nrm;
  return {std::move(x), kind};
}

UniformTensor::UniformTensor(std::uint32_t order, std::size_t dim, std::vector<Entry> entries)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
  if (order_ < 2) throw DomainError("tensor order must be >= 2");
  if (order_ > kMaxOrder) throw DomainError("tensor order exceeds " + std::to_string(kMaxOrder));
  apply_coef_.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (support_size(e.support) != order_) {
      throw DomainError("tensor entry support size differs from the order");
    }
    double denom = 1.0;
    for (const auto& slot : e.support) {
      if (slot.node >= dim_) throw DomainError("tensor entry index out of range");
      denom *= kFactorial[slot.mult];
    }
    apply_coef_.push_back(e.value * kFactorial[order_ - 1] / denom);
  }
}

double UniformTensor::component(std::span<const NodeIdx> index) const {
  if (index.size() != order_) throw DomainError("index length differs from tensor order");
  const Support key = make_support({index.begin(), index.end()});
  for (const auto& e : entries_) {
    if (e.support == key) return e.value;
  }
  return 0.0;
}

UniformTensor UniformTensor::scaled(double gamma) const {
  std::vector<Entry> out = entries_;
  for (auto& e : out) e.value *= gamma;
  return UniformTensor(order_, dim_, std::move(out));
}

UniformTensor from_hypergraph(const Hypergraph& h) {
  if (!h.is_uniform()) throw DomainError("tensor requires a uniform hypergraph");
  if (h.num_edges() == 0) throw DomainError("tensor requires at least one hyperedge");
  std::map<Support, std::size_t> seen;
  std::vector<UniformTensor::Entry> entries;
  entries.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    auto [it, inserted] = seen.try_emplace(e.support, entries.size());
    if (inserted) {
      entries.push_back({e.support, e.weight});
    } else {
      entries[it->second].value += e.weight;
    }
  }
  return UniformTensor(h.max_edge_size(), h.num_nodes(), std::move(entries));
}

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERRANK_THREADS")) {
    unsigned cap = 0;
    const std::string_view sv(env);
    auto res = std::from_chars(sv.data(), sv.data() + sv.size(), cap);
    if (res.ec == std::errc{} && cap > 0) return std::min(hw, cap);
  }
  return hw;
}

std::vector<double> apply(const UniformTensor& t, std::span<const double> x) {
  if (x.size() != t.dim()) throw DomainError("apply: vector length differs from tensor dimension");
  const auto& entries = t.entries_;
  const std::size_t n = t.dim();
  const std::size_t chunks = (entries.size() + kChunk - 1) / kChunk;
  std::vector<double> y(n, 0.0);
  if (chunks <= 1) {
    apply_range(entries, t.apply_coef_, 0, entries.size(), x, y);
    return y;
  }
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(n, 0.0));
  const unsigned threads = std::min<std::size_t>(worker_threads(), chunks);
  auto work = [&](unsigned tid) {
    for (std::size_t c = tid; c < chunks; c += threads) {
      apply_range(entries, t.apply_coef_, c * kChunk,
                  std::min(entries.size(), (c + 1) * kChunk), x, partial[c]);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
  }
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < n; ++i) y[i] += part[i];
  }
  return y;
}

double FlatteningMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& p, std::size_t c) { return p.first < c; });
  return (it != r.end() && it->first == j) ? it->second : 0.0;
}

bool FlatteningMatrix::is_irreducible() const {
  const std::size_t n = rows_.size();
  if (n <= 1) return true;
  // Reachability from node 0 forwards and backwards.
  auto reach_all = [&](bool transpose) {
    std::vector<std::vector<NodeIdx>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, v] : rows_[i]) {
        if (v == 0.0) continue;
        if (transpose) {
          adj[j].push_back(static_cast<NodeIdx>(i));
        } else {
          adj[i].push_back(j);
        }
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<NodeIdx> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const NodeIdx u = stack.back();
      stack.pop_back();
      for (NodeIdx v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return reach_all(false) && reach_all(true);
}

FlatteningMatrix flattening_matrix(const UniformTensor& t) {
  const std::uint32_t m = t.order();
  std::vector<std::map<NodeIdx, ExactSum>> acc(t.dim());
  for (const auto& e : t.entries()) {
    Support rest = e.support;
    for (auto& si : rest) {
      --si.mult;
      for (auto& sj : rest) {
        if (sj.mult == 0) continue;
        --sj.mult;
        // Arrangements of the remaining m-2 indices.
        std::uint64_t count = kIntFactorial[m - 2];
        for (const auto& r : rest) count /= kIntFactorial[r.mult];
        acc[si.node][sj.node].add_product(std::abs(e.value), static_cast<double>(count));
        ++sj.mult;
      }
      ++si.mult;
    }
  }
  FlatteningMatrix out(t.dim());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    out.rows_[i].reserve(acc[i].size());
    for (const auto& [j, sum] : acc[i]) out.rows_[i].emplace_back(j, sum.value());
  }
  return out;
}

bool is_weakly_irreducible(const UniformTensor& t) {
  // Same nonzero pattern as flattening_matrix: i ~ j iff they share a support.
  if (t.dim() <= 1) return true;
  UnionFind uf(t.dim());
  std::size_t merges = 0;
  for (const auto& e : t.entries()) {
    for (std::size_t k = 1; k < e.support.size(); ++k) {
      if (uf.unite(e.support[0].node, e.support[k].node)) ++merges;
    }
  }
  return merges + 1 == t.dim();
}

}  // namespace hyperrank
