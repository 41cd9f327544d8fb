#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "basekit/group.hpp"
#include "basekit/size_set.hpp"

namespace basekit {

enum class SearchMode {
  /// Every point set / sequence, no symmetry reduction. Small degrees only.
  Exhaustive,
  /// One representative per orbit of the current pointwise stabilizer,
  /// memoized on fixed-point sets.
  Pruned,
};

struct SearchOptions {
  SearchMode mode = SearchMode::Pruned;
  /// Ceiling on search nodes; exceeding it throws BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  /// Record one witness per size.
  bool witnesses = false;
};

/// A size set plus, on request, one witness (a minimal base as a set, or an
/// irredundant base as a sequence) for each size.
struct SizeSearchResult {
  SizeSet sizes;
  std::map<int, std::vector<Point>> witnesses;
  std::uint64_t nodes = 0;
};

struct BaseStats {
  int b = 0;     // smallest base
  int B = 0;     // largest minimal base
  int Imax = 0;  // longest irredundant base
};

bool is_base(const PermGroup& g, std::span<const Point> points);
bool is_minimal_base(const PermGroup& g, std::span<const Point> points);
bool is_irredundant_sequence(const PermGroup& g, std::span<const Point> sequence);
bool is_independent_set(const PermGroup& g, std::span<const Point> points);

/// M(G): sizes of all minimal bases. Throws DomainError for the trivial group.
SizeSearchResult minimal_base_sizes(const PermGroup& g, const SearchOptions& options = {});

/// I(G): lengths of all irredundant bases. Throws DomainError for the trivial group.
SizeSearchResult irredundant_base_sizes(const PermGroup& g, const SearchOptions& options = {});

/// Largest independent set. Throws DomainError for the trivial group.
int height(const PermGroup& g, const SearchOptions& options = {});

/// b(G) alone, by iterative deepening; cheaper than a full M-set search.
int min_base_size(const PermGroup& g, const SearchOptions& options = {});

BaseStats base_stats(const PermGroup& g, const SearchOptions& options = {});

bool is_ibis(const PermGroup& g, const SearchOptions& options = {});
bool is_mibis(const PermGroup& g, const SearchOptions& options = {});

/**
 * Runs the M-set, I-set and height searches on one group sharing a single
 * cache of pointwise stabilizers. Pruned mode only.
 */
class BaseAnalyzer {
 public:
  explicit BaseAnalyzer(const PermGroup& g, SearchOptions options = {});
  ~BaseAnalyzer();
  BaseAnalyzer(const BaseAnalyzer&) = delete;
  BaseAnalyzer& operator=(const BaseAnalyzer&) = delete;

  SizeSearchResult minimal_sizes();
  SizeSearchResult irredundant_sizes();
  int height();
  int min_base_size();
  std::uint64_t nodes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Product actions

/// A point (delta, lambda) of Delta x Lambda.
using GridPoint = std::pair<Point, Point>;

struct IndicatorVectors {
  std::vector<int> vG;
  std::vector<int> vH;
  int nG = 0;
  int nH = 0;
};

/**
 * vG[i] = 1 iff some g in G moves delta_i while fixing every other delta_j
 * (likewise vH). Throws DomainError unless `base` is a minimal base of the
 * product action of G and H.
 */
IndicatorVectors indicator_vectors(const PermGroup& g, const PermGroup& h,
                                   std::span<const GridPoint> base);

/**
 * A minimal base of size k of the product action, from ordered minimal bases
 * of the factors: a+b-k-1 diagonal points, a run along row lambda_{a+b-k-1},
 * then a run down column delta_a. Requires max(a,b) <= k <= a+b-2; throws
 * DomainError otherwise.
 */
std::vector<GridPoint> grid_minimal_base(std::span<const Point> base_g,
                                         std::span<const Point> base_h, int k);

/// delta * lambda_degree + lambda.
inline Point grid_encode(const GridPoint& p, std::size_t lambda_degree) {
  return static_cast<Point>(p.first * lambda_degree + p.second);
}

}  // namespace basekit
