#include "basekit/group.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "basekit/error.hpp"

namespace basekit {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix,
                                 std::optional<std::uint64_t> known_order)
    : degree_(degree), target_(known_order) {
  std::vector<bool> in_base(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree) throw DomainError("base point out of range");
    if (in_base[b]) throw DomainError("repeated base point " + std::to_string(b));
    in_base[b] = true;
    push_level(b);
  }

  for (const auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    strong_.push_back(g);
  }

  // No strong generator may fix the whole base.
  for (const auto& g : strong_) {
    bool fixes_all = true;
    for (const auto& level : levels_)
      if (!g.fixes(level.base_point)) {
        fixes_all = false;
        break;
      }
    if (fixes_all) push_level(g.first_moved());
  }

  for (std::uint32_t id = 0; id < strong_.size(); ++id) {
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      attach(id, l);
      if (!strong_[id].fixes(levels_[l].base_point)) break;
    }
  }

  if (!levels_.empty() && !target_reached()) close(levels_.size() - 1);
}

void StabilizerChain::push_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  level.orbit.push_back(base_point);
  level.transversal.push_back(Permutation::identity(degree_));
  level.inverse_transversal.push_back(Permutation::identity(degree_));
  level.position.assign(degree_, -1);
  level.position[base_point] = 0;
  levels_.push_back(std::move(level));
  checked_.emplace_back(1, 0);
}

void StabilizerChain::attach(std::uint32_t gen_id, std::size_t l) {
  Level& level = levels_[l];
  level.generator_ids.push_back(gen_id);
  const Permutation& g = strong_[gen_id];

  auto try_add = [&](std::size_t from, const Permutation& s) {
    Point image = s[level.orbit[from]];
    if (level.position[image] >= 0) return;
    level.position[image] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(image);
    level.transversal.push_back(compose(level.transversal[from], s));
    level.inverse_transversal.push_back(inverse(level.transversal.back()));
  };

  const std::size_t old_size = level.orbit.size();
  for (std::size_t a = 0; a < old_size; ++a) try_add(a, g);
  for (std::size_t a = old_size; a < level.orbit.size(); ++a)
    for (std::uint32_t id : level.generator_ids) try_add(a, strong_[id]);
  checked_[l].resize(level.orbit.size(), 0);
}

void StabilizerChain::close(std::size_t start_level) {
  std::size_t i = start_level;
  while (true) {
    if (target_reached()) return;
    bool extended = false;
    for (std::size_t a = 0; a < levels_[i].orbit.size() && !extended; ++a) {
      while (checked_[i][a] < levels_[i].generator_ids.size()) {
        const Level& level = levels_[i];
        const Permutation& s = strong_[level.generator_ids[checked_[i][a]++]];
        const Point image = s[level.orbit[a]];
        Permutation schreier = compose(level.transversal[a], s,
                                       level.inverse_transversal[level.position[image]]);
        auto [residue, stop] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;

        if (stop == levels_.size()) push_level(residue.first_moved());
        const auto id = static_cast<std::uint32_t>(strong_.size());
        strong_.push_back(std::move(residue));
        for (std::size_t l = i + 1; l <= stop; ++l) attach(id, l);
        if (target_reached()) return;
        i = stop;
        extended = true;
        break;
      }
    }
    if (extended) continue;
    if (i == 0) return;
    --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> result;
  result.reserve(levels_.size());
  for (const auto& level : levels_) result.push_back(level.base_point);
  return result;
}

std::uint64_t StabilizerChain::stabilizer_order(std::size_t level) const noexcept {
  std::uint64_t order = 1;
  for (std::size_t l = level; l < levels_.size(); ++l) order *= levels_[l].orbit.size();
  return order;
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> result;
  if (level >= levels_.size()) return result;
  for (std::uint32_t id : levels_[level].generator_ids) result.push_back(strong_[id]);
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g,
                                                          std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t pos = level.position[g[level.base_point]];
    if (pos < 0) return {std::move(g), l};
    g = compose(g, level.inverse_transversal[pos]);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch in membership test");
  return sift(g).first.is_identity();
}

bool StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw DomainError("generator degree mismatch");
  auto [residue, stop] = sift(g);
  if (residue.is_identity()) return false;
  if (stop == levels_.size()) push_level(residue.first_moved());
  const auto id = static_cast<std::uint32_t>(strong_.size());
  strong_.push_back(std::move(residue));
  for (std::size_t l = 0; l <= stop; ++l) attach(id, l);
  if (!target_reached()) close(stop);
  return true;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Lazy {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), lazy_(std::make_shared<Lazy>()) {
  if (degree == 0) throw DomainError("group degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw DomainError("generator of degree " + std::to_string(g.degree()) +
                        " in a group of degree " + std::to_string(degree));
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::uint64_t known_order)
    : PermGroup(degree, std::move(generators)) {
  known_order_ = known_order;
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    lazy_->chain = std::make_unique<StabilizerChain>(degree_, generators_,
                                                     std::span<const Point>{}, known_order_);
  });
  return *lazy_->chain;
}

std::uint64_t PermGroup::order() const {
  if (known_order_) return *known_order_;
  if (generators_.empty()) return 1;
  return chain().order();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DomainError("degree mismatch in membership test");
  if (generators_.empty()) return p.is_identity();
  return chain().contains(p);
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<Point> orbit(const PermGroup& group, Point point) {
  if (point >= group.degree()) throw DomainError("point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t i = 0; i < result.size(); ++i)
    for (const auto& g : group.generators()) {
      Point y = g[result[i]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  std::sort(result.begin(), result.end());
  return result;
}

OrbitPartition orbit_partition(const PermGroup& group) {
  const std::size_t n = group.degree();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  OrbitPartition result;
  result.orbit_of.assign(n, kUnset);
  for (Point start = 0; start < n; ++start) {
    if (result.orbit_of[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(result.orbits.size());
    std::vector<Point> members{start};
    result.orbit_of[start] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (const auto& g : group.generators()) {
        Point y = g[members[i]];
        if (result.orbit_of[y] == kUnset) {
          result.orbit_of[y] = id;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    result.orbits.push_back(std::move(members));
  }
  return result;
}

bool is_transitive(const PermGroup& group) {
  return orbit(group, 0).size() == group.degree();
}

StabilizerChain schreier_sims(const PermGroup& group, std::span<const Point> base_prefix) {
  return StabilizerChain(group.degree(), group.generators(), base_prefix);
}

std::uint64_t group_order(const PermGroup& group) { return group.order(); }

bool contains(const PermGroup& group, const Permutation& p) { return group.contains(p); }

PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Point> points) {
  std::vector<Point> prefix(points.begin(), points.end());
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  StabilizerChain chain(group.degree(), group.generators(), prefix);
  const std::size_t level = prefix.size();
  return PermGroup(group.degree(), chain.stabilizer_generators(level),
                   chain.stabilizer_order(level));
}

PermGroup point_stabilizer(const PermGroup& group, Point y) {
  if (y >= group.degree()) throw DomainError("point out of range");
  const std::size_t n = group.degree();
  if (group.is_trivial()) return PermGroup(n, {}, 1);
  const auto& gens = group.generators();

  // Orbit of y as a Schreier tree: parent orbit index and generator index.
  std::vector<std::int32_t> position(n, -1);
  std::vector<Point> orb{y};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> via{0};
  position[y] = 0;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (std::uint32_t s = 0; s < gens.size(); ++s) {
      Point z = gens[s][orb[i]];
      if (position[z] >= 0) continue;
      position[z] = static_cast<std::int32_t>(orb.size());
      orb.push_back(z);
      parent.push_back(static_cast<std::uint32_t>(i));
      via.push_back(s);
    }

  const std::uint64_t target = group.order() / orb.size();
  if (target == 1) return PermGroup(n, {}, 1);
  if (orb.size() == 1) return group;

  // Transversal elements are built on demand by walking the tree.
  std::unordered_map<std::uint32_t, Permutation> cache;
  std::function<const Permutation&(std::uint32_t)> transversal =
      [&](std::uint32_t a) -> const Permutation& {
    if (auto it = cache.find(a); it != cache.end()) return it->second;
    Permutation t = a == 0 ? Permutation::identity(n) : compose(transversal(parent[a]), gens[via[a]]);
    return cache.emplace(a, std::move(t)).first->second;
  };

  StabilizerChain chain(n, {}, {}, target);
  for (std::uint32_t a = 0; a < orb.size(); ++a)
    for (std::uint32_t s = 0; s < gens.size(); ++s) {
      const auto b = static_cast<std::uint32_t>(position[gens[s][orb[a]]]);
      if (parent[b] == a && via[b] == s && b != 0) continue;  // tree edge
      Permutation schreier =
          compose(transversal(a), gens[s], inverse(transversal(b)));
      if (schreier.is_identity()) continue;
      chain.add_generator(schreier);
      if (chain.order() == target) return PermGroup(n, chain.strong_generators(), target);
    }
  throw std::logic_error("point_stabilizer: Schreier generators fell short of the stabilizer order");
}

}  // namespace basekit
