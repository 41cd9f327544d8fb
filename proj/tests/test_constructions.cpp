#include <numeric>

#include "basekit/analytics.hpp"
#include "basekit/constructions.hpp"
#include "basekit/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace basekit;

namespace {

// Builds the point map BFS-numbered -> label-numbered by walking both
// actions from the seed coset, and checks it intertwines every generator.
bool actions_agree(const PermGroup& bfs, const PermGroup& labels, std::size_t seed_label) {
  if (bfs.degree() != labels.degree()) return false;
  if (bfs.generators().size() != labels.generators().size()) return false;
  constexpr auto kUnset = static_cast<Point>(-1);
  std::vector<Point> map(bfs.degree(), kUnset);
  std::vector<bool> hit(bfs.degree(), false);
  map[0] = static_cast<Point>(seed_label);
  hit[seed_label] = true;
  std::vector<Point> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Point x = queue[i];
    for (std::size_t s = 0; s < bfs.generators().size(); ++s) {
      const Point y = bfs.generators()[s][x];
      const Point fy = labels.generators()[s][map[x]];
      if (map[y] == kUnset) {
        if (hit[fy]) return false;
        map[y] = fy;
        hit[fy] = true;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return queue.size() == bfs.degree();
}

bool all_bijections(const PermGroup& g) {
  for (const auto& s : g.generators()) {
    std::vector<bool> seen(g.degree(), false);
    for (Point x = 0; x < g.degree(); ++x) {
      if (s[x] >= g.degree() || seen[s[x]]) return false;
      seen[s[x]] = true;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("basic builders") {
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(1).is_trivial());
  CHECK(symmetric(1).degree() == 1);
  CHECK(cyclic_regular(2).degree() == 2);
  CHECK(cyclic_regular(3).order() == 3);

  const auto e = elem_abelian_regular(2, 3);
  CHECK(e.degree() == 8);
  CHECK(e.order() == 8);
  for (const auto& a : e.generators()) {
    CHECK(compose(a, a).is_identity());
    for (const auto& b : e.generators()) CHECK(compose(a, b) == compose(b, a));
  }
  CHECK(elem_abelian_regular(2, 7).order() == 128);
  CHECK(elem_abelian_regular(3, 2).order() == 9);
  CHECK_THROWS_AS(elem_abelian_regular(4, 2), DomainError);

  CHECK(disjoint_product(symmetric(3), symmetric(4)).degree() == 7);
  const auto p = product_action(symmetric(3), symmetric(4));
  CHECK(p.degree() == 12);
  CHECK(p.order() == 144);
  CHECK(is_transitive(p));
}

TEST_CASE("prescribed size construction") {
  auto c = prescribed_sizes_group({1, 3, 5, 7}, 2);
  CHECK(c.group.degree() == 182);
  CHECK(c.domain.degree == 182);
  CHECK(c.domain.blocks.front().label == "Delta_1");
  CHECK(c.domain.blocks.front().size == 128);
  CHECK(all_bijections(c.group));

  // One point of Delta_2 plus one point of each of the last four 2-cycles.
  const auto& blocks = c.domain.blocks;
  std::vector<Point> base{blocks[1].first};
  for (std::size_t i = blocks.size() - 4; i < blocks.size(); ++i) base.push_back(blocks[i].first);
  CHECK(is_minimal_base(c.group, base));

  auto c1 = prescribed_sizes_group({1}, 2);
  CHECK(c1.group.degree() == 2);
  CHECK(c1.group.order() == 2);
  CHECK(prescribed_sizes_group({2, 3}, 2).domain.blocks.front().label == "Sym(2)");
  CHECK_THROWS_AS(prescribed_sizes_group({}, 2), DomainError);
  CHECK_THROWS_AS(prescribed_sizes_group({1, 2}, 6), DomainError);

  for (const std::vector<int>& x : {std::vector<int>{1, 4}, {2, 5}, {1, 2, 3}, {1, 3}}) {
    CAPTURE(x.size());
    CHECK(minimal_base_sizes(prescribed_sizes_group(x, 2).group).sizes == SizeSet(x));
  }
  CHECK(minimal_base_sizes(prescribed_sizes_group({1, 3}, 3).group).sizes == SizeSet({1, 3}));
}

TEST_CASE("interval product factors") {
  using V = std::vector<std::size_t>;
  CHECK(interval_product_factors(3, 3, SizeKind::Minimal) == V{4});
  CHECK(interval_product_factors(2, 4, SizeKind::Minimal) == V{3, 3, 3, 3});
  CHECK(interval_product_factors(3, 7, SizeKind::Minimal) == V{4, 4, 4, 3});
  CHECK(interval_product_factors(2, 3, SizeKind::Irredundant) == V{3, 3, 2});
  CHECK_THROWS_AS(interval_product_factors(1, 3, SizeKind::Minimal), DomainError);
  CHECK_THROWS_AS(interval_product_factors(4, 3, SizeKind::Minimal), DomainError);

  for (int a = 2; a <= 3; ++a)
    for (int b = a; b <= 5; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto target = SizeSet::interval(a, b);
      const auto gm = interval_product_group(a, b, SizeKind::Minimal);
      if (gm.degree() <= 300) CHECK(minimal_base_sizes(gm).sizes == target);
      const auto gi = interval_product_group(a, b, SizeKind::Irredundant);
      if (gi.degree() <= 300) CHECK(irredundant_base_sizes(gi).sizes == target);
    }
}

TEST_CASE("wreath coset actions") {
  CHECK(wreath_imprimitive(4, 3).order() == 41472);
  CHECK(wreath_imprimitive(4, 3).degree() == 12);
  CHECK(wreath_point_subgroup(4, 3).order() == 144);
  CHECK(wreath_point_subgroup(4, 2).order() == 6);
  for (std::size_t k : {2, 3}) {
    CAPTURE(k);
    const auto bfs = wreath_coset_action(4, k);
    const auto labels = wreath_coset_action_by_labels(4, k);
    CHECK(bfs.degree() == 96 * k);
    CHECK(is_transitive(bfs));
    CHECK(all_bijections(bfs));
    CHECK(bfs.order() == wreath_imprimitive(4, k).order());
    CHECK(pointwise_stabilizer(bfs, std::vector<Point>{0}).order() ==
          wreath_point_subgroup(4, k).order());
    const auto seed = wreath_coset_label(4, k, Permutation::identity(4 * k));
    CHECK(actions_agree(bfs, labels, seed));
  }
  CHECK_THROWS_AS(wreath_coset_action(4, 3, 100), BudgetExceeded);
}

TEST_CASE("k-subsets") {
  CHECK(k_subsets(4, 2).size() == 6);
  CHECK(k_subsets(4, 2).front() == std::vector<Point>{0, 1});
  CHECK(k_subsets(4, 2).back() == std::vector<Point>{2, 3});
  const auto g = k_subset_action(6, 2);
  CHECK(g.degree() == 15);
  CHECK(g.order() == 720);
  CHECK(k_subset_action(5, 1).degree() == 5);
  CHECK_THROWS_AS(k_subset_action(5, 3), DomainError);
  CHECK_THROWS_AS(k_subset_action(5, 0), DomainError);
}

TEST_CASE("GL(4,2) on planes") {
  const auto g = gl42_on_2subspaces();
  CHECK(g.degree() == 35);
  CHECK(g.order() == 20160);
  CHECK(is_transitive(g));
  CHECK(all_bijections(g));
  CHECK(oracle::closure(35, g.generators()).size() == 20160);
}

TEST_CASE("construction expressions") {
  GroupSpec s5{spec::Sym{5}};
  auto c = build_group(s5);
  CHECK(c.group.degree() == 5);
  CHECK(c.group.order() == 120);

  GroupSpec s3{spec::Sym{3}};
  GroupSpec four{spec::ProductAction{{s3, s3, s3, s3}}};
  CHECK(build_group(four).group.degree() == 81);

  GroupSpec t{spec::PrescribedSizes{{1, 4}, 2}};
  CHECK(minimal_base_sizes(build_group(t).group, {SearchMode::Exhaustive, 100'000'000, false})
            .sizes == SizeSet({1, 4}));

  GroupSpec disjoint{spec::DisjointProduct{{s3, GroupSpec{spec::CyclicRegular{2}}}}};
  auto d = build_group(disjoint);
  CHECK(d.group.degree() == 5);
  CHECK(d.domain.blocks.size() == 2);
  CHECK(d.domain.label_of(4).rfind("factor2", 0) == 0);

  CHECK_THROWS_AS(validate(GroupSpec{spec::WreathCoset{2, 3}}), DomainError);
  CHECK_THROWS_AS(validate(GroupSpec{spec::KSubsets{5, 3}}), DomainError);
  CHECK_THROWS_AS(validate(GroupSpec{spec::IntervalProduct{3, 2, SizeKind::Minimal}}), DomainError);
  CHECK_THROWS_AS(validate(GroupSpec{spec::PrescribedSizes{{0, 2}, 2}}), DomainError);
  CHECK_THROWS_AS(validate(GroupSpec{spec::ElemAbelianRegular{6, 1}}), DomainError);
  CHECK(describe(GroupSpec{spec::ProductAction{{s3, s3}}}) == "Sym(3) x Sym(3)");
}

TEST_CASE("disjoint products add size sets") {
  const std::vector<PermGroup> pieces{symmetric(3), symmetric(4), cyclic_regular(3),
                                      elem_abelian_regular(2, 2)};
  for (const auto& g : pieces)
    for (const auto& h : pieces) {
      const auto mg = minimal_base_sizes(g).sizes;
      const auto mh = minimal_base_sizes(h).sizes;
      CHECK(minimal_base_sizes(disjoint_product(g, h)).sizes == sumset(mg, mh));
    }
}
