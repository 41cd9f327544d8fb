#include "basekit/size_set.hpp"

#include <algorithm>

#include "basekit/error.hpp"

namespace basekit {

SizeSet::SizeSet(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  std::sort(sizes_.begin(), sizes_.end());
  sizes_.erase(std::unique(sizes_.begin(), sizes_.end()), sizes_.end());
  if (!sizes_.empty() && sizes_.front() < 1) throw DomainError("size sets hold positive integers");
}

SizeSet SizeSet::interval(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return SizeSet(std::move(v));
}

SizeSet SizeSet::from_mask(std::uint64_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) v.push_back(i);
  return SizeSet(std::move(v));
}

int SizeSet::min() const {
  if (sizes_.empty()) throw DomainError("empty size set has no minimum");
  return sizes_.front();
}

int SizeSet::max() const {
  if (sizes_.empty()) throw DomainError("empty size set has no maximum");
  return sizes_.back();
}

bool SizeSet::contains(int x) const {
  return std::binary_search(sizes_.begin(), sizes_.end(), x);
}

bool SizeSet::is_interval() const noexcept {
  return !sizes_.empty() &&
         static_cast<std::size_t>(sizes_.back() - sizes_.front() + 1) == sizes_.size();
}

bool SizeSet::is_subset_of(const SizeSet& other) const {
  return std::includes(other.sizes_.begin(), other.sizes_.end(), sizes_.begin(), sizes_.end());
}

std::uint64_t SizeSet::mask() const {
  std::uint64_t m = 0;
  for (int x : sizes_)
    if (x < 64) m |= std::uint64_t{1} << x;
  return m;
}

std::string SizeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out + "}";
}

SizeSet sumset(const SizeSet& x, const SizeSet& y) {
  std::vector<int> v;
  for (int a : x.sizes())
    for (int b : y.sizes()) v.push_back(a + b);
  return SizeSet(std::move(v));
}

}  // namespace basekit
