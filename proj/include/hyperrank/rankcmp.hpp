#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperrank {

// Tie-corrected Kendall tau-b, computed with Knight's O(n log n) merge-sort
// scheme. Returns NaN when either column is entirely tied. Throws
// DomainError on length mismatch or fewer than two items.
double kendall_tau(std::span<const double> a, std::span<const double> b);

// Score columns aligned on the union of node labels. Nodes missing from a
// method get score 0 and are flagged as filled. Repeated tags are allowed;
// lookups by tag return the first match.
class RankingTable {
 public:
  struct Column {
    std::string tag;
    std::vector<double> scores;
    std::vector<char> filled;
  };

  void add(const std::string& tag, const std::vector<std::string>& labels,
           const std::vector<double>& scores);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(const std::string& tag) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Column> columns_;
};

struct TauMatrix {
  std::vector<std::string> tags;
  std::vector<std::vector<double>> values;
};

// Kendall tau-b between every pair of columns; the diagonal is 1.
TauMatrix pairwise_heatmap(const RankingTable& t);

struct TopKPoint {
  std::size_t k = 0;
  std::size_t set_size = 0;  // k plus any nodes tied with the k-th score
  double tau = 0.0;
};

struct TopKCurve {
  std::string method_a;
  std::string method_b;
  std::vector<TopKPoint> points;
};

// For each K, takes the top-K nodes of column a (ties at the boundary
// included) and correlates their a- and b-scores. K < 2 is skipped.
TopKCurve topk_curve(const RankingTable& t, const std::string& a, const std::string& b,
                     const std::vector<std::size_t>& ks);

// Keeps the curves reaching the highest maximum, the lowest minimum, the
// lowest mean and the highest mean, without repeats, in input order.
std::vector<TopKCurve> curve_filter(const std::vector<TopKCurve>& curves);

void write_heatmap_csv(std::ostream& os, const TauMatrix& m);
void write_curves_csv(std::ostream& os, const std::vector<TopKCurve>& curves);

}  // namespace hyperrank
