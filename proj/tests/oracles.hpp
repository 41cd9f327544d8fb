#pragma once

// Brute-force reference computations used by the unit and acceptance tests.
// Nothing here touches stabilizer chains.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "basekit/perm.hpp"

namespace basekit::oracle {

/// Every element of <gens>, by breadth-first closure. Stops after `limit`.
inline std::vector<Permutation> closure(std::size_t degree,
                                        const std::vector<Permutation>& gens,
                                        std::size_t limit = 200000) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size() && elements.size() <= limit; ++i)
    for (const auto& g : gens) {
      Permutation h = compose(elements[i], g);
      if (seen.insert(h).second) elements.push_back(std::move(h));
    }
  return elements;
}

/// Order of the pointwise stabilizer of `points` among `elements`.
inline std::size_t stabilizer_count(const std::vector<Permutation>& elements,
                                    const std::vector<Point>& points) {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [&](const Permutation& g) {
        return std::all_of(points.begin(), points.end(),
                           [&](Point x) { return g[x] == x; });
      }));
}

inline bool is_base(const std::vector<Permutation>& elements, const std::vector<Point>& pts) {
  return stabilizer_count(elements, pts) == 1;
}

/// Sizes of all minimal bases, by enumerating every subset of the domain.
inline std::set<int> minimal_base_sizes(std::size_t degree,
                                        const std::vector<Permutation>& elements) {
  std::set<int> sizes;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << degree); ++mask) {
    std::vector<Point> pts;
    for (Point x = 0; x < degree; ++x)
      if (mask >> x & 1) pts.push_back(x);
    if (!is_base(elements, pts)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < pts.size() && minimal; ++i) {
      auto smaller = pts;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (is_base(elements, smaller)) minimal = false;
    }
    if (minimal) sizes.insert(static_cast<int>(pts.size()));
  }
  return sizes;
}

/// Lengths of irredundant bases, by enumerating strictly descending sequences.
inline void irredundant_lengths(const std::vector<Permutation>& stab, std::size_t degree,
                                int depth, std::set<int>& out) {
  if (stab.size() == 1) {
    out.insert(depth);
    return;
  }
  for (Point x = 0; x < degree; ++x) {
    std::vector<Permutation> next;
    for (const auto& g : stab)
      if (g[x] == x) next.push_back(g);
    if (next.size() < stab.size()) irredundant_lengths(next, degree, depth + 1, out);
  }
}

/// Maximum size of an independent set, by enumerating every subset.
inline int height(std::size_t degree, const std::vector<Permutation>& elements) {
  int best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << degree); ++mask) {
    std::vector<Point> pts;
    for (Point x = 0; x < degree; ++x)
      if (mask >> x & 1) pts.push_back(x);
    if (static_cast<int>(pts.size()) <= best) continue;
    const std::size_t full = stabilizer_count(elements, pts);
    bool independent = true;
    for (std::size_t i = 0; i < pts.size() && independent; ++i) {
      auto smaller = pts;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (stabilizer_count(elements, smaller) == full) independent = false;
    }
    if (independent) best = static_cast<int>(pts.size());
  }
  return best;
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace basekit::oracle
