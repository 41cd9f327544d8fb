#include "basekit/closed_forms.hpp"

#include <algorithm>
#include <numeric>

#include "basekit/analytics.hpp"
#include "basekit/constructions.hpp"
#include "basekit/error.hpp"

namespace basekit {

std::optional<int> ProductIntervalPrediction::measure(const SizeSet& m) const {
  for (int eps = 0; eps <= 2; ++eps)
    if (upper_by_epsilon[static_cast<std::size_t>(eps)] >= lower &&
        m == SizeSet::interval(lower, upper_by_epsilon[static_cast<std::size_t>(eps)]))
      return eps;
  return std::nullopt;
}

ProductIntervalPrediction predict_product_interval(int b_g, int b_h, int big_b_g, int big_b_h) {
  if (b_g < 1 || b_h < 1 || b_g > big_b_g || b_h > big_b_h)
    throw DomainError("product prediction needs 1 <= b <= B for both factors");
  ProductIntervalPrediction p;
  p.lower = std::max(b_g, b_h);
  for (int eps = 0; eps <= 2; ++eps)
    p.upper_by_epsilon[static_cast<std::size_t>(eps)] = big_b_g + big_b_h - eps;
  return p;
}

SizeSet predict_symmetric_product_sizes(std::span<const int> degrees) {
  if (degrees.empty()) throw DomainError("need at least one symmetric factor");
  int lo = 0;
  int sum = 0;
  for (int n : degrees) {
    if (n < 2) throw DomainError("symmetric factors need degree >= 2");
    lo = std::max(lo, n - 1);
    sum += n - 1;
  }
  const int hi = sum - static_cast<int>(degrees.size());
  if (hi < lo) throw DomainError("closed form is empty for these degrees");
  return SizeSet::interval(lo, hi);
}

int predict_product_irredundant(std::span<const int> factor_imax) {
  if (factor_imax.empty()) throw DomainError("need at least one factor");
  int sum = 0;
  for (int i : factor_imax) {
    if (i < 1) throw DomainError("irredundant base lengths are positive");
    sum += i;
  }
  return sum - (static_cast<int>(factor_imax.size()) - 1);
}

int subset_action_base_size(int n, int k) {
  if (k < 1 || n < k * k)
    throw DomainError("outside validity range: needs k >= 1 and n >= k^2, got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  return (2 * (n - 1) + k) / (k + 1);
}

int subset_action_max_irredundant(int n, int k) {
  if (k < 1 || 2 * k > n) throw DomainError("needs 1 <= k <= n/2");
  return std::gcd(n, k) == 1 ? n - 1 : n - 2;
}

SubsetIntervalReplay subset_interval_replay(std::size_t recompute_up_to) {
  struct Entry { int n, k, b; };
  // Base sizes of S_13 and S_14 on k-subsets, from the published table.
  static constexpr Entry kTable[] = {
      {13, 1, 12}, {13, 2, 8}, {13, 3, 6}, {13, 4, 5}, {13, 5, 5}, {13, 6, 4},
      {14, 2, 9},  {14, 4, 6}, {14, 6, 5}, {14, 7, 4},
  };
  SubsetIntervalReplay r;
  r.source_note = "b values are published table constants, not recomputed here";
  r.contradiction = true;
  for (const auto& e : kTable) {
    SubsetIntervalRow row;
    row.n = e.n;
    row.k = e.k;
    row.gcd = std::gcd(e.n, e.k);
    row.imax = subset_action_max_irredundant(e.n, e.k);
    row.b = e.b;
    if (recompute_up_to > 0 && k_subsets(static_cast<std::size_t>(e.n),
                                         static_cast<std::size_t>(e.k)).size() <= recompute_up_to)
      row.recomputed_b = min_base_size(
          k_subset_action(static_cast<std::size_t>(e.n), static_cast<std::size_t>(e.k)));
    if (row.b == r.target_min) r.contradiction = false;
    r.rows.push_back(row);
  }
  if (recompute_up_to > 0) r.source_note += " except where recomputed_b is given";
  r.verdict = r.contradiction ? "interval {3,…,12} not realized"
                              : "interval {3,…,12} may be realized";
  return r;
}

}  // namespace basekit
