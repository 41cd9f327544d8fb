#include "flat_lattice.hpp"

#include <bit>

namespace basekit::detail {

std::size_t PointSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t PointSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

PointSet fixed_points(const PermGroup& g) {
  PointSet fixed(g.degree());
  for (Point x = 0; x < g.degree(); ++x) fixed.set(x);
  for (const auto& s : g.generators())
    for (Point x = 0; x < g.degree(); ++x)
      if (s[x] != x) fixed.reset(x);
  return fixed;
}

std::size_t footprint(const PermGroup& g) {
  return g.generators().size() * g.degree() * sizeof(Point) + 64;
}

}  // namespace

FlatLattice::FlatLattice(const PermGroup& group, std::size_t group_cache_bytes)
    : degree_(group.degree()), cache_limit_(group_cache_bytes) {
  Flat root;
  root.fixed = fixed_points(group);
  root.order = group.order();
  root.group = std::make_shared<const PermGroup>(group);
  index_.emplace(root.fixed, 0);
  flats_.push_back(std::move(root));
}

void FlatLattice::remember(Flat& flat, std::shared_ptr<const PermGroup> group) {
  const std::size_t bytes = footprint(*group);
  if (cache_bytes_ + bytes > cache_limit_) {
    for (std::size_t i = 1; i < flats_.size(); ++i) flats_[i].group.reset();
    cache_bytes_ = 0;
  }
  cache_bytes_ += bytes;
  flat.group = std::move(group);
}

std::shared_ptr<const PermGroup> FlatLattice::group_of(Id id) {
  if (flats_[id].group) return flats_[id].group;
  // Evicted: rebuild from the parent it was first reached from.
  auto parent = group_of(flats_[id].parent);
  ++stabilizer_computations_;
  auto group = std::make_shared<const PermGroup>(point_stabilizer(*parent, flats_[id].via));
  remember(flats_[id], group);
  return group;
}

FlatLattice::Id FlatLattice::join(Id flat, Point y) {
  if (flats_[flat].fixed.test(y)) return flat;
  const std::uint64_t key = (std::uint64_t{flat} << 32) | y;
  if (auto it = joins_.find(key); it != joins_.end()) return it->second;

  auto parent = group_of(flat);
  ++stabilizer_computations_;
  auto stab = std::make_shared<const PermGroup>(point_stabilizer(*parent, y));
  PointSet fixed = fixed_points(*stab);

  Id id;
  if (auto it = index_.find(fixed); it != index_.end()) {
    id = it->second;
    if (!flats_[id].group) remember(flats_[id], std::move(stab));
  } else {
    id = static_cast<Id>(flats_.size());
    Flat f;
    f.order = stab->order();
    f.parent = flat;
    f.via = y;
    index_.emplace(fixed, id);
    f.fixed = std::move(fixed);
    flats_.push_back(std::move(f));
    remember(flats_.back(), std::move(stab));
  }
  joins_.emplace(key, id);
  return id;
}

const FlatLattice::OrbitReps& FlatLattice::orbit_reps(Id id) {
  if (flats_[id].reps) return *flats_[id].reps;
  auto reps = std::make_unique<OrbitReps>();
  if (flats_[id].order > 1) {
    auto part = orbit_partition(*group_of(id));
    for (const auto& o : part.orbits)
      if (o.size() > 1) {
        reps->reps.push_back(o.front());
        reps->sizes.push_back(static_cast<std::uint32_t>(o.size()));
      }
  }
  flats_[id].reps = std::move(reps);
  return *flats_[id].reps;
}

}  // namespace basekit::detail
