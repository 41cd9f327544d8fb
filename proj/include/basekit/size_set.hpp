#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace basekit {

/// Sorted set of positive base cardinalities, e.g. an M-set or an I-set.
class SizeSet {
 public:
  SizeSet() = default;
  /// Sorts and deduplicates; throws DomainError on non-positive entries.
  explicit SizeSet(std::vector<int> sizes);
  static SizeSet interval(int lo, int hi);
  /// Bit i of `mask` set <=> i is a member.
  static SizeSet from_mask(std::uint64_t mask);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  bool empty() const noexcept { return sizes_.empty(); }
  std::size_t count() const noexcept { return sizes_.size(); }
  int min() const;
  int max() const;
  bool contains(int x) const;
  /// max - min + 1 == count (false when empty).
  bool is_interval() const noexcept;
  bool is_subset_of(const SizeSet& other) const;
  std::uint64_t mask() const;

  /// "{1,3,5,7}"
  std::string to_string() const;

  friend bool operator==(const SizeSet&, const SizeSet&) = default;

 private:
  std::vector<int> sizes_;
};

/// { a + b : a in x, b in y }
SizeSet sumset(const SizeSet& x, const SizeSet& y);

}  // namespace basekit
