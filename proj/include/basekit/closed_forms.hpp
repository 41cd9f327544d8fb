#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basekit/size_set.hpp"

namespace basekit {

/**
 * M-set of a product action G x H: an interval from max(b_G, b_H) up to
 * B_G + B_H - eps for some eps in {0, 1, 2}. eps is not predicted; it is
 * read off a computed M-set with measure().
 */
struct ProductIntervalPrediction {
  int lower = 0;
  std::array<int, 3> upper_by_epsilon{};  // index eps -> B_G + B_H - eps
  std::optional<int> measured_epsilon;

  /// The eps for which `m` equals [lower, upper_by_epsilon[eps]], if any.
  std::optional<int> measure(const SizeSet& m) const;
};

/// Throws DomainError unless all inputs are positive with b <= B.
ProductIntervalPrediction predict_product_interval(int b_g, int b_h, int big_b_g, int big_b_h);

/// M-set of the product action of S_{n_1} x ... x S_{n_t}:
/// [max(n_i - 1), sum(n_i - 1) - t]. Throws DomainError if some n_i < 2 or
/// the interval comes out empty (a single factor, or factors S_2).
SizeSet predict_symmetric_product_sizes(std::span<const int> degrees);

/// Longest irredundant base of a t-fold product action from the factors'
/// values: sum(I_i) - (t - 1).
int predict_product_irredundant(std::span<const int> factor_imax);

/// Base size of S_n on k-subsets for n >= k^2: ceil(2(n-1)/(k+1)).
/// Throws DomainError outside that range.
int subset_action_base_size(int n, int k);

/// Longest irredundant base of S_n on k-subsets: n-1 if gcd(n,k) = 1, else n-2.
int subset_action_max_irredundant(int n, int k);

/**
 * Replays the argument that {3, ..., 12} is not the I-set of any S_n on
 * k-subsets: I = 12 forces n = 13 (gcd 1) or n = 14 (gcd > 1), and every
 * admissible k then has base size above 3.
 */
struct SubsetIntervalRow {
  int n = 0;
  int k = 0;
  int gcd = 0;
  int imax = 0;              // from the closed form
  int b = 0;                 // published table value
  std::optional<int> recomputed_b;
};

struct SubsetIntervalReplay {
  int target_min = 3;
  int target_max = 12;
  std::vector<SubsetIntervalRow> rows;
  bool contradiction = false;  // every row has b != target_min
  std::string verdict;
  std::string source_note;
};

/// With `recompute_up_to` > 0, recomputes b for every row whose action has
/// at most that many points.
SubsetIntervalReplay subset_interval_replay(std::size_t recompute_up_to = 0);

}  // namespace basekit
