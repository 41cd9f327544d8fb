#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "basekit/perm.hpp"

namespace basekit {

/**
 * Base and strong generating set built by deterministic Schreier-Sims.
 *
 * Level i stores the base point b_i, the strong generators fixing
 * b_0..b_{i-1}, the fundamental orbit of b_i under them, and an explicit
 * transversal: transversal(i, x) maps b_i to x.
 */
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<std::uint32_t> generator_ids;  // indices into strong_generators()
    std::vector<Point> orbit;                  // discovery order, orbit[0] == base_point
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    std::vector<std::int32_t> position;  // per domain point: index into orbit or -1

    bool in_orbit(Point x) const { return position[x] >= 0; }
  };

  /**
   * Builds a chain whose base starts with `base_prefix` (kept even where it
   * gives no descent). Further base points are the smallest point moved by
   * the generators that fix the current base. When `known_order` is given the
   * construction stops as soon as the orbit product reaches it.
   */
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {},
                  std::optional<std::uint64_t> known_order = std::nullopt);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  std::vector<Point> base() const;

  std::uint64_t order() const noexcept { return stabilizer_order(0); }

  /// Order of the stabilizer of base[0..level-1].
  std::uint64_t stabilizer_order(std::size_t level) const noexcept;

  /// Generators of the stabilizer of base[0..level-1] (empty when trivial).
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  /// Strips g through the levels starting at `from_level`. Returns the
  /// residue and the level where stripping stopped (levels().size() if it
  /// passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level = 0) const;

  bool contains(const Permutation& g) const;

  /// Extends the group by g. Returns false when g was already a member.
  bool add_generator(const Permutation& g);

 private:
  void push_level(Point base_point);
  void attach(std::uint32_t gen_id, std::size_t level);
  void close(std::size_t start_level);
  bool target_reached() const noexcept { return target_ && order() == *target_; }

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  // checked_[l][a]: number of level-l generators whose Schreier generator at
  // orbit position a has been sifted.
  std::vector<std::vector<std::uint32_t>> checked_;
  std::optional<std::uint64_t> target_;
};

/**
 * A permutation group given by generators on {0, ..., degree-1}.
 *
 * Identity generators are dropped and duplicates removed. The stabilizer
 * chain is built lazily on first use and shared between copies.
 */
class PermGroup {
 public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  /// Same, with the order supplied by the caller (used to stop Schreier-Sims early).
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::uint64_t known_order);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool is_trivial() const noexcept { return generators_.empty(); }

  const StabilizerChain& chain() const;
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Lazy;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<std::uint64_t> known_order_;
  std::shared_ptr<Lazy> lazy_;
};

/// Orbit of `point`, ascending.
std::vector<Point> orbit(const PermGroup& group, Point point);

/// Orbit partition: orbit_of[x] is the index of x's orbit; orbits are
/// numbered by their smallest point, which is also orbits[i].front().
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::vector<Point>> orbits;
};
OrbitPartition orbit_partition(const PermGroup& group);

bool is_transitive(const PermGroup& group);

StabilizerChain schreier_sims(const PermGroup& group, std::span<const Point> base_prefix);

std::uint64_t group_order(const PermGroup& group);

/// Throws DomainError on degree mismatch.
bool contains(const PermGroup& group, const Permutation& p);

/// G_(points): generators of the pointwise stabilizer of `points`.
PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Point> points);

/// G_y via Schreier generators, stopping once the order |G| / |y^G| is reached.
PermGroup point_stabilizer(const PermGroup& group, Point y);

}  // namespace basekit
