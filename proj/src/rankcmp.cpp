#include "hyperrank/rankcmp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "hyperrank/hypergraph.hpp"
#include "hyperrank/io.hpp"
#include "hyperrank/tensor.hpp"

namespace hyperrank {

namespace {

std::int64_t pairs(std::int64_t k) { return k * (k - 1) / 2; }

// Sum of C(run, 2) over runs of equal values in an already sorted sequence.
template <typename Eq>
std::int64_t tied_pairs(std::size_t n, Eq&& equal) {
  std::int64_t total = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (equal(i - 1, i)) {
      ++run;
    } else {
      total += pairs(run);
      run = 1;
    }
  }
  return total + pairs(run);
}

// Stable merge sort of `v`, returning the number of inversions.
std::int64_t sort_count_swaps(std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> buf(n);
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          buf[k++] = v[j++];
          swaps += static_cast<std::int64_t>(mid - i);
        } else {
          buf[k++] = v[i++];
        }
      }
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
    }
    std::swap(v, buf);
  }
  return swaps;
}

}  // namespace

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("kendall_tau: columns differ in length");
  const std::size_t n = a.size();
  if (n < 2) throw DomainError("kendall_tau needs at least two items");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i] < a[j] || (a[i] == a[j] && b[i] < b[j]);
  });

  const std::int64_t n0 = pairs(static_cast<std::int64_t>(n));
  const std::int64_t ties_a =
      tied_pairs(n, [&](std::size_t i, std::size_t j) { return a[order[i]] == a[order[j]]; });
  const std::int64_t ties_ab = tied_pairs(n, [&](std::size_t i, std::size_t j) {
    return a[order[i]] == a[order[j]] && b[order[i]] == b[order[j]];
  });

  std::vector<double> bs(n);
  for (std::size_t i = 0; i < n; ++i) bs[i] = b[order[i]];
  const std::int64_t swaps = sort_count_swaps(bs);
  const std::int64_t ties_b = tied_pairs(n, [&](std::size_t i, std::size_t j) { return bs[i] == bs[j]; });

  const std::int64_t numerator = n0 - ties_a - ties_b + ties_ab - 2 * swaps;
  const std::int64_t pa = n0 - ties_a;
  const std::int64_t pb = n0 - ties_b;
  if (pa == 0 || pb == 0) return std::numeric_limits<double>::quiet_NaN();
  const long double denom = std::sqrt(static_cast<long double>(pa) * static_cast<long double>(pb));
  return static_cast<double>(static_cast<long double>(numerator) / denom);
}

void RankingTable::add(const std::string& tag, const std::vector<std::string>& labels,
                       const std::vector<double>& scores) {
  if (labels.size() != scores.size()) throw DomainError("label and score counts differ");
  for (const auto& l : labels) {
    if (index_.try_emplace(l, labels_.size()).second) {
      labels_.push_back(l);
      for (auto& c : columns_) {
        c.scores.push_back(0.0);
        c.filled.push_back(1);
      }
    }
  }
  Column col{tag, std::vector<double>(labels_.size(), 0.0), std::vector<char>(labels_.size(), 1)};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t row = index_.at(labels[i]);
    col.scores[row] = scores[i];
    col.filled[row] = 0;
  }
  columns_.push_back(std::move(col));
}

const RankingTable::Column& RankingTable::column(const std::string& tag) const {
  for (const auto& c : columns_) {
    if (c.tag == tag) return c;
  }
  throw DomainError("unknown method column: " + tag);
}

TauMatrix pairwise_heatmap(const RankingTable& t) {
  const auto& cols = t.columns();
  if (cols.size() < 2) throw DomainError("heatmap needs at least two columns");
  TauMatrix out;
  const std::size_t k = cols.size();
  out.values.assign(k, std::vector<double>(k, 1.0));
  for (const auto& c : cols) out.tags.push_back(c.tag);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) cells.emplace_back(i, j);
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const auto [i, j] = cells[c];
      const double tau = kendall_tau(cols[i].scores, cols[j].scores);
      out.values[i][j] = tau;
      out.values[j][i] = tau;
    }
  };
  const unsigned threads = std::min<std::size_t>(worker_threads(), cells.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return out;
}

TopKCurve topk_curve(const RankingTable& t, const std::string& a, const std::string& b,
                     const std::vector<std::size_t>& ks) {
  const auto& ca = t.column(a).scores;
  const auto& cb = t.column(b).scores;
  if (!std::is_sorted(ks.begin(), ks.end())) throw DomainError("K values must be sorted");
  const std::size_t n = ca.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return ca[i] > ca[j]; });

  TopKCurve curve{a, b, {}};
  std::vector<double> sa;
  std::vector<double> sb;
  for (std::size_t k : ks) {
    if (k > n) throw DomainError("K exceeds the number of ranked nodes");
    if (k < 2) continue;
    std::size_t take = k;
    while (take < n && ca[order[take]] == ca[order[k - 1]]) ++take;
    sa.clear();
    sb.clear();
    for (std::size_t r = 0; r < take; ++r) {
      sa.push_back(ca[order[r]]);
      sb.push_back(cb[order[r]]);
    }
    curve.points.push_back({k, take, kendall_tau(sa, sb)});
  }
  return curve;
}

std::vector<TopKCurve> curve_filter(const std::vector<TopKCurve>& curves) {
  if (curves.empty()) return {};
  struct Summary {
    double max = -std::numeric_limits<double>::infinity();
    double min = std::numeric_limits<double>::infinity();
    double mean = std::numeric_limits<double>::quiet_NaN();
  };
  std::vector<Summary> sums(curves.size());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    double total = 0.0;
    std::size_t count = 0;
    for (const auto& p : curves[c].points) {
      if (std::isnan(p.tau)) continue;
      sums[c].max = std::max(sums[c].max, p.tau);
      sums[c].min = std::min(sums[c].min, p.tau);
      total += p.tau;
      ++count;
    }
    if (count > 0) sums[c].mean = total / static_cast<double>(count);
  }
  auto pick = [&](auto key, bool largest) {
    std::size_t best = curves.size();
    for (std::size_t c = 0; c < curves.size(); ++c) {
      const double v = key(sums[c]);
      if (std::isnan(v) || std::isinf(v)) continue;
      if (best == curves.size() || (largest ? v > key(sums[best]) : v < key(sums[best]))) best = c;
    }
    return best;
  };
  std::vector<std::size_t> keep = {
      pick([](const Summary& s) { return s.max; }, true),
      pick([](const Summary& s) { return s.min; }, false),
      pick([](const Summary& s) { return s.mean; }, false),
      pick([](const Summary& s) { return s.mean; }, true),
  };
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<TopKCurve> out;
  for (std::size_t idx : keep) {
    if (idx == curves.size()) continue;
    const bool repeat = std::any_of(out.begin(), out.end(), [&](const TopKCurve& c) {
      if (c.points.size() != curves[idx].points.size()) return false;
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& p = c.points[i];
        const auto& q = curves[idx].points[i];
        if (p.k != q.k || !(p.tau == q.tau || (std::isnan(p.tau) && std::isnan(q.tau)))) return false;
      }
      return true;
    });
    if (!repeat) out.push_back(curves[idx]);
  }
  return out;
}

void write_heatmap_csv(std::ostream& os, const TauMatrix& m) {
  os << "method";
  for (const auto& t : m.tags) os << ',' << t;
  os << '\n';
  for (std::size_t i = 0; i < m.tags.size(); ++i) {
    os << m.tags[i];
    for (double v : m.values[i]) os << ',' << format_score(v);
    os << '\n';
  }
}

void write_curves_csv(std::ostream& os, const std::vector<TopKCurve>& curves) {
  os << "method_a,method_b,K,set_size,tau\n";
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      os << c.method_a << ',' << c.method_b << ',' << p.k << ',' << p.set_size << ','
         << format_score(p.tau) << '\n';
    }
  }
}

}  // namespace hyperrank
