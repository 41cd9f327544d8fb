#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace basekit {

/// A point of the domain {0, ..., degree-1}.
using Point = std::uint32_t;

/**
 * A bijection on {0, ..., degree-1} stored as its image sequence.
 *
 * Composition is written on the right: compose(p, q) applies p first, then q,
 * so act(compose(p, q), x) == act(q, act(p, x)).
 */
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `images` is a bijection of {0, ..., size-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// Unchecked image of `x`.
  Point operator[](Point x) const noexcept { return images_[x]; }

  /// Checked image of `x`; throws DomainError when x >= degree.
  Point act(Point x) const;

  bool is_identity() const noexcept;
  bool fixes(Point x) const noexcept { return images_[x] == x; }

  /// Points moved by the permutation, ascending.
  std::vector<Point> support() const;

  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const noexcept;

  /// JSON-style image list, e.g. "[1,0,2]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);
  friend Permutation compose(const Permutation&, const Permutation&,
                             const Permutation&);

  std::vector<Point> images_;
};

/// Apply p, then q. Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Apply a, then b, then c.
Permutation compose(const Permutation& a, const Permutation& b,
                    const Permutation& c);

/// Checked point action, same as p.act(x).
inline Point act(const Permutation& p, Point x) { return p.act(x); }

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace basekit
