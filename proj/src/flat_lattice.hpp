#pragma once

// Pointwise stabilizers indexed by their fixed-point sets.
//
// For a point set S the pointwise stabilizer G_(S) equals G_(F) where F is
// the set of points fixed by G_(S); F is called the flat of S. Flats are
// interned once, and cl(F u {y}) is memoized per (flat, point).

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "basekit/group.hpp"

namespace basekit::detail {

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t degree) : words_((degree + 63) / 64, 0) {}

  bool test(Point x) const noexcept { return words_[x >> 6] >> (x & 63) & 1; }
  void set(Point x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(Point x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  std::size_t count() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

class FlatLattice {
 public:
  using Id = std::uint32_t;

  explicit FlatLattice(const PermGroup& group, std::size_t group_cache_bytes = std::size_t{1} << 30);

  /// Flat of the empty set (the points fixed by the whole group).
  static constexpr Id root() noexcept { return 0; }

  /// Flat of F u {y}.
  Id join(Id flat, Point y);

  bool is_full(Id flat) const noexcept { return flats_[flat].order == 1; }
  bool contains(Id flat, Point y) const noexcept { return flats_[flat].fixed.test(y); }
  std::uint64_t order(Id flat) const noexcept { return flats_[flat].order; }

  struct OrbitReps {
    std::vector<Point> reps;          // smallest point of each non-trivial orbit
    std::vector<std::uint32_t> sizes; // matching orbit sizes
  };
  /// Orbits of G_(F) outside F.
  const OrbitReps& orbit_reps(Id flat);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t flat_count() const noexcept { return flats_.size(); }
  std::uint64_t stabilizer_computations() const noexcept { return stabilizer_computations_; }

 private:
  struct Flat {
    PointSet fixed;
    std::uint64_t order = 1;
    std::shared_ptr<const PermGroup> group;  // may be dropped when the cache is full
    std::unique_ptr<OrbitReps> reps;
    Id parent = 0;
    Point via = 0;
  };

  std::shared_ptr<const PermGroup> group_of(Id flat);
  void remember(Flat& flat, std::shared_ptr<const PermGroup> group);

  std::size_t degree_;
  std::vector<Flat> flats_;
  std::unordered_map<PointSet, Id, PointSetHash> index_;
  std::unordered_map<std::uint64_t, Id> joins_;
  std::size_t cache_bytes_ = 0;
  std::size_t cache_limit_;
  std::uint64_t stabilizer_computations_ = 0;
};

}  // namespace basekit::detail
