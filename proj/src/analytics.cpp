#include "basekit/analytics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "basekit/constructions.hpp"
#include "basekit/error.hpp"
#include "flat_lattice.hpp"

namespace basekit {

namespace {

using detail::FlatLattice;
using Id = FlatLattice::Id;

std::vector<Point> as_set(std::span<const Point> points) {
  std::vector<Point> v(points.begin(), points.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_points(const PermGroup& g, std::span<const Point> points) {
  for (Point x : points)
    if (x >= g.degree())
      throw DomainError("point " + std::to_string(x) + " outside a domain of degree " +
                        std::to_string(g.degree()));
}

void require_nontrivial(const PermGroup& g) {
  if (g.is_trivial()) throw DomainError("the trivial group has no base sizes");
}

std::uint64_t stab_order(const PermGroup& g, std::span<const Point> points) {
  return pointwise_stabilizer(g, points).order();
}

std::vector<Point> without(std::span<const Point> points, std::size_t i) {
  std::vector<Point> v(points.begin(), points.end());
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return v;
}

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("more than " + std::to_string(budget_) + " search nodes");
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};


// ---------------------------------------------------------------------------
// Exhaustive searches: no symmetry reduction, no sharing between branches.

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const PermGroup& g, const SearchOptions& options)
      : g_(g), options_(options), counter_(options.budget) {}

  SizeSearchResult minimal_sizes() {
    std::vector<Point> current;
    minimal_from(g_, 0, current);
    return finish();
  }

  SizeSearchResult irredundant_sizes() {
    std::vector<Point> current;
    irredundant_from(g_, current);
    return finish();
  }

  int height() {
    std::vector<Point> current;
    int best = 0;
    independent_from(g_, 0, current, best);
    return best;
  }

  std::uint64_t nodes() const noexcept { return counter_.nodes(); }

 private:
  SizeSearchResult finish() {
    SizeSearchResult r;
    r.sizes = SizeSet::from_mask(mask_);
    r.witnesses = std::move(witnesses_);
    r.nodes = counter_.nodes();
    mask_ = 0;
    witnesses_.clear();
    return r;
  }

  void record(const std::vector<Point>& points) {
    const int size = static_cast<int>(points.size());
    mask_ |= std::uint64_t{1} << size;
    if (options_.witnesses && !witnesses_.count(size)) witnesses_[size] = points;
  }

  void minimal_from(const PermGroup& k, Point start, std::vector<Point>& current) {
    counter_.tick();
    if (k.is_trivial()) {
      if (is_minimal_base(g_, current)) record(current);
      return;
    }
    for (Point y = start; y < g_.degree(); ++y) {
      PermGroup next = point_stabilizer(k, y);
      if (next.order() == k.order()) continue;
      current.push_back(y);
      minimal_from(next, y + 1, current);
      current.pop_back();
    }
  }

  void irredundant_from(const PermGroup& k, std::vector<Point>& current) {
    counter_.tick();
    if (k.is_trivial()) {
      record(current);
      return;
    }
    for (Point y = 0; y < g_.degree(); ++y) {
      PermGroup next = point_stabilizer(k, y);
      if (next.order() == k.order()) continue;
      current.push_back(y);
      irredundant_from(next, current);
      current.pop_back();
    }
  }

  void independent_from(const PermGroup& k, Point start, std::vector<Point>& current, int& best) {
    counter_.tick();
    best = std::max(best, static_cast<int>(current.size()));
    for (Point y = start; y < g_.degree(); ++y) {
      PermGroup next = point_stabilizer(k, y);
      if (next.order() == k.order()) continue;
      current.push_back(y);
      if (is_independent_set(g_, current)) independent_from(next, y + 1, current, best);
      current.pop_back();
    }
  }

  const PermGroup& g_;
  SearchOptions options_;
  NodeCounter counter_;
  std::uint64_t mask_ = 0;
  std::map<int, std::vector<Point>> witnesses_;
};

// ---------------------------------------------------------------------------
// Pruned searches over the lattice of fixed-point sets.
//
// A set S is tracked by its state: the flat F = cl(S) followed by the sorted
// multiset of cl(S \ {x}) for x in S. S u {y} is independent iff
// cl(S \ {x} u {y}) != cl(S u {y}) for every x, so the state alone decides
// which extensions are legal and what they lead to.

struct Outcome {
  std::uint64_t sizes = 0;  // bit t: some minimal base extends S by t points
  int height = 0;           // most points an independent extension can add
};

struct StateHash {
  std::size_t operator()(const std::vector<Id>& v) const noexcept {
    std::size_t h = v.size();
    for (Id x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

class PrunedSearch {
 public:
  PrunedSearch(const PermGroup& g, const SearchOptions& options)
      : lattice_(g), options_(options), counter_(options.budget) {}

  SizeSearchResult minimal_sizes() {
    const std::vector<Id> root{FlatLattice::root()};
    const Outcome o = explore(root);
    SizeSearchResult r;
    r.sizes = SizeSet::from_mask(o.sizes);
    if (options_.witnesses)
      for (int t : r.sizes.sizes()) {
        std::vector<Point> path;
        minimal_witness(root, t, path);
        std::sort(path.begin(), path.end());
        r.witnesses[t] = std::move(path);
      }
    r.nodes = counter_.nodes();
    return r;
  }

  int height() { return explore({FlatLattice::root()}).height; }

  SizeSearchResult irredundant_sizes() {
    const std::uint64_t mask = lengths(FlatLattice::root());
    SizeSearchResult r;
    r.sizes = SizeSet::from_mask(mask);
    if (options_.witnesses)
      for (int t : r.sizes.sizes()) {
        std::vector<Point> path;
        Id f = FlatLattice::root();
        for (int left = t; left > 0; --left)
          for (Point y : lattice_.orbit_reps(f).reps) {
            const Id next = lattice_.join(f, y);
            if (lengths(next) >> (left - 1) & 1) {
              path.push_back(y);
              f = next;
              break;
            }
          }
        r.witnesses[t] = std::move(path);
      }
    r.nodes = counter_.nodes();
    return r;
  }

  int min_base_size() {
    const Id root = FlatLattice::root();
    for (int d = 0;; ++d)
      if (reaches(root, d)) return d;
  }

  std::uint64_t nodes() const noexcept { return counter_.nodes(); }

 private:
  // Child state for S u {y}, or nullopt when S u {y} is not independent.
  std::optional<std::vector<Id>> extend(const std::vector<Id>& state, Point y) {
    const Id joined = lattice_.join(state[0], y);
    std::vector<Id> child{joined, state[0]};
    for (std::size_t i = 1; i < state.size(); ++i) {
      const Id smaller = lattice_.join(state[i], y);
      if (smaller == joined) return std::nullopt;
      child.push_back(smaller);
    }
    std::sort(child.begin() + 1, child.end());
    return child;
  }

  Outcome explore(const std::vector<Id>& state) {
    if (lattice_.is_full(state[0])) return {1, 0};
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    counter_.tick();
    Outcome out;
    // The reps vector may move when the lattice grows; copy it.
    const std::vector<Point> reps = lattice_.orbit_reps(state[0]).reps;
    for (Point y : reps) {
      auto child = extend(state, y);
      if (!child) continue;
      const Outcome sub = explore(*child);
      out.sizes |= sub.sizes << 1;
      out.height = std::max(out.height, sub.height + 1);
    }
    memo_.emplace(state, out);
    return out;
  }

  void minimal_witness(const std::vector<Id>& state, int t, std::vector<Point>& path) {
    if (t == 0) return;
    const std::vector<Point> reps = lattice_.orbit_reps(state[0]).reps;
    for (Point y : reps) {
      auto child = extend(state, y);
      if (!child) continue;
      if (explore(*child).sizes >> (t - 1) & 1) {
        path.push_back(y);
        minimal_witness(*child, t - 1, path);
        return;
      }
    }
    throw std::logic_error("witness reconstruction lost its way");
  }

  std::uint64_t lengths(Id f) {
    if (lattice_.is_full(f)) return 1;
    if (auto it = lengths_.find(f); it != lengths_.end()) return it->second;
    counter_.tick();
    std::uint64_t mask = 0;
    const std::vector<Point> reps = lattice_.orbit_reps(f).reps;
    for (Point y : reps) mask |= lengths(lattice_.join(f, y)) << 1;
    lengths_.emplace(f, mask);
    return mask;
  }

  // Is some base of G_(F) at most d points long?
  bool reaches(Id f, int d) {
    if (lattice_.is_full(f)) return true;
    if (d == 0) return false;
    const std::uint64_t key = (std::uint64_t{f} << 8) | static_cast<std::uint64_t>(d);
    if (unreachable_.count(key)) return false;
    counter_.tick();
    const auto& info = lattice_.orbit_reps(f);
    // |G_(F)| is at most the largest orbit length to the power d.
    const std::uint32_t widest = *std::max_element(info.sizes.begin(), info.sizes.end());
    long double bound = 1;
    for (int i = 0; i < d; ++i) bound *= widest;
    if (static_cast<long double>(lattice_.order(f)) > bound) {
      unreachable_.insert(key);
      return false;
    }
    std::vector<std::size_t> order(info.reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return info.sizes[a] > info.sizes[b]; });
    const std::vector<Point> reps = info.reps;
    for (std::size_t i : order)
      if (reaches(lattice_.join(f, reps[i]), d - 1)) return true;
    unreachable_.insert(key);
    return false;
  }

  FlatLattice lattice_;
  SearchOptions options_;
  NodeCounter counter_;
  std::unordered_map<std::vector<Id>, Outcome, StateHash> memo_;
  std::unordered_map<Id, std::uint64_t> lengths_;
  std::unordered_set<std::uint64_t> unreachable_;
};

}  // namespace

// ---------------------------------------------------------------------------

bool is_base(const PermGroup& g, std::span<const Point> points) {
  check_points(g, points);
  return stab_order(g, as_set(points)) == 1;
}

bool is_minimal_base(const PermGroup& g, std::span<const Point> points) {
  check_points(g, points);
  const auto set = as_set(points);
  if (stab_order(g, set) != 1) return false;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (stab_order(g, without(set, i)) == 1) return false;
  return true;
}

bool is_independent_set(const PermGroup& g, std::span<const Point> points) {
  check_points(g, points);
  const auto set = as_set(points);
  const std::uint64_t whole = stab_order(g, set);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (stab_order(g, without(set, i)) == whole) return false;
  return true;
}

bool is_irredundant_sequence(const PermGroup& g, std::span<const Point> sequence) {
  check_points(g, sequence);
  if (as_set(sequence).size() != sequence.size()) return false;
  // With the sequence as base prefix, level i has a non-trivial orbit iff
  // adding sequence[i] shrinks the stabilizer.
  const StabilizerChain chain = schreier_sims(g, sequence);
  for (std::size_t i = 0; i < sequence.size(); ++i)
    if (chain.levels()[i].orbit.size() < 2) return false;
  return chain.stabilizer_order(sequence.size()) == 1;
}

SizeSearchResult minimal_base_sizes(const PermGroup& g, const SearchOptions& options) {
  require_nontrivial(g);
  if (options.mode == SearchMode::Exhaustive) return ExhaustiveSearch(g, options).minimal_sizes();
  return PrunedSearch(g, options).minimal_sizes();
}

SizeSearchResult irredundant_base_sizes(const PermGroup& g, const SearchOptions& options) {
  require_nontrivial(g);
  if (options.mode == SearchMode::Exhaustive)
    return ExhaustiveSearch(g, options).irredundant_sizes();
  return PrunedSearch(g, options).irredundant_sizes();
}

int height(const PermGroup& g, const SearchOptions& options) {
  require_nontrivial(g);
  if (options.mode == SearchMode::Exhaustive) return ExhaustiveSearch(g, options).height();
  return PrunedSearch(g, options).height();
}

int min_base_size(const PermGroup& g, const SearchOptions& options) {
  require_nontrivial(g);
  if (options.mode == SearchMode::Exhaustive)
    return ExhaustiveSearch(g, options).minimal_sizes().sizes.min();
  return PrunedSearch(g, options).min_base_size();
}

BaseStats base_stats(const PermGroup& g, const SearchOptions& options) {
  require_nontrivial(g);
  SizeSet m, i;
  if (options.mode == SearchMode::Exhaustive) {
    ExhaustiveSearch search(g, options);
    m = search.minimal_sizes().sizes;
    i = search.irredundant_sizes().sizes;
  } else {
    PrunedSearch search(g, options);
    m = search.minimal_sizes().sizes;
    i = search.irredundant_sizes().sizes;
  }
  return {m.min(), m.max(), i.max()};
}

bool is_ibis(const PermGroup& g, const SearchOptions& options) {
  return irredundant_base_sizes(g, options).sizes.count() == 1;
}

bool is_mibis(const PermGroup& g, const SearchOptions& options) {
  return minimal_base_sizes(g, options).sizes.count() == 1;
}

struct BaseAnalyzer::Impl {
  Impl(const PermGroup& g, const SearchOptions& options) : search(g, options) {}
  PrunedSearch search;
};

BaseAnalyzer::BaseAnalyzer(const PermGroup& g, SearchOptions options) {
  require_nontrivial(g);
  options.mode = SearchMode::Pruned;
  impl_ = std::make_unique<Impl>(g, options);
}

BaseAnalyzer::~BaseAnalyzer() = default;

SizeSearchResult BaseAnalyzer::minimal_sizes() { return impl_->search.minimal_sizes(); }
SizeSearchResult BaseAnalyzer::irredundant_sizes() { return impl_->search.irredundant_sizes(); }
int BaseAnalyzer::height() { return impl_->search.height(); }
int BaseAnalyzer::min_base_size() { return impl_->search.min_base_size(); }
std::uint64_t BaseAnalyzer::nodes() const { return impl_->search.nodes(); }

// ---------------------------------------------------------------------------

IndicatorVectors indicator_vectors(const PermGroup& g, const PermGroup& h,
                                   std::span<const GridPoint> base) {
  const std::size_t nl = h.degree();
  std::vector<Point> encoded;
  for (const auto& p : base) {
    if (p.first >= g.degree() || p.second >= nl)
      throw DomainError("grid point outside the product domain");
    encoded.push_back(grid_encode(p, nl));
  }
  if (as_set(encoded).size() != encoded.size())
    throw DomainError("repeated point in a product-action base");
  const PermGroup product = product_action(g, h);
  if (!is_minimal_base(product, encoded))
    throw DomainError("not a minimal base of the product action");

  auto indicator = [&](const PermGroup& factor, auto coord) {
    std::vector<int> v;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::vector<Point> others;
      for (std::size_t j = 0; j < base.size(); ++j)
        if (j != i) others.push_back(coord(base[j]));
      const PermGroup stab = pointwise_stabilizer(factor, as_set(others));
      const Point target = coord(base[i]);
      bool moved = false;
      for (const auto& s : stab.generators()) moved = moved || s[target] != target;
      v.push_back(moved ? 1 : 0);
    }
    return v;
  };
  IndicatorVectors r;
  r.vG = indicator(g, [](const GridPoint& p) { return p.first; });
  r.vH = indicator(h, [](const GridPoint& p) { return p.second; });
  r.nG = static_cast<int>(std::count(r.vG.begin(), r.vG.end(), 1));
  r.nH = static_cast<int>(std::count(r.vH.begin(), r.vH.end(), 1));
  return r;
}

std::vector<GridPoint> grid_minimal_base(std::span<const Point> base_g,
                                         std::span<const Point> base_h, int k) {
  const bool swapped = base_g.size() > base_h.size();
  auto delta = swapped ? base_h : base_g;
  auto lambda = swapped ? base_g : base_h;
  const int a = static_cast<int>(delta.size());
  const int b = static_cast<int>(lambda.size());
  if (k < std::max(a, b) || k > a + b - 2)
    throw DomainError("grid base size " + std::to_string(k) + " outside [" +
                      std::to_string(std::max(a, b)) + ", " + std::to_string(a + b - 2) + "]");
  // 1-indexed as in the recipe: diagonal up to d, row lambda_d, column delta_a.
  const int d = a + b - k - 1;
  auto D = [&](int i) { return delta[static_cast<std::size_t>(i - 1)]; };
  auto L = [&](int j) { return lambda[static_cast<std::size_t>(j - 1)]; };
  std::vector<GridPoint> out;
  for (int i = 1; i <= d; ++i) out.emplace_back(D(i), L(i));
  for (int i = d + 1; i <= a - 1; ++i) out.emplace_back(D(i), L(d));
  for (int j = d + 1; j <= b; ++j) out.emplace_back(D(a), L(j));
  if (swapped)
    for (auto& p : out) std::swap(p.first, p.second);
  return out;
}

}  // namespace basekit
