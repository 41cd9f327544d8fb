#include "basekit/perm.hpp"

#include <algorithm>
#include <sstream>

#include "basekit/error.hpp"

namespace basekit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw DomainError("image sequence is not a bijection: " + to_string());
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  auto result = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw DomainError("cycle point out of range");
      if (used[from]) throw DomainError("cycles are not disjoint");
      used[from] = true;
      result.images_[from] = to;
    }
  }
  return result;
}

Point Permutation::act(Point x) const {
  if (x >= images_.size())
    throw DomainError("point " + std::to_string(x) + " outside degree " +
                      std::to_string(images_.size()));
  return images_[x];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) moved.push_back(static_cast<Point>(i));
  return moved;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch in compose: " + std::to_string(p.degree()) +
                      " vs " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  const Point* pi = p.images_.data();
  const Point* qi = q.images_.data();
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = qi[pi[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation compose(const Permutation& a, const Permutation& b, const Permutation& c) {
  if (a.degree() != b.degree() || b.degree() != c.degree())
    throw DomainError("degree mismatch in compose");
  std::vector<Point> images(a.degree());
  const Point* ai = a.images_.data();
  const Point* bi = b.images_.data();
  const Point* ci = c.images_.data();
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = ci[bi[ai[i]]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace basekit
