#include "basekit/analytics.hpp"
#include "basekit/closed_forms.hpp"
#include "basekit/constructions.hpp"
#include "basekit/error.hpp"
#include "doctest.h"

using namespace basekit;

TEST_CASE("product interval prediction") {
  auto p = predict_product_interval(2, 2, 2, 2);
  CHECK(p.lower == 2);
  CHECK(p.upper_by_epsilon == std::array<int, 3>{4, 3, 2});
  CHECK(p.measure(SizeSet({2})) == 2);
  CHECK(p.measure(SizeSet({2, 3})) == 1);
  CHECK_FALSE(p.measure(SizeSet({3})).has_value());
  CHECK_THROWS_AS(predict_product_interval(3, 2, 2, 2), DomainError);

  const auto s3 = symmetric(3);
  const auto s3s3 = product_action(s3, s3);
  CHECK(p.measure(minimal_base_sizes(s3s3).sizes) == 2);
  // Both factors S3 x S3: b = B = 2.
  CHECK(p.measure(minimal_base_sizes(product_action(s3s3, s3s3)).sizes) == 0);
  auto q = predict_product_interval(3, 2, 3, 2);
  CHECK(q.measure(minimal_base_sizes(product_action(symmetric(4), s3s3)).sizes) == 1);
}

TEST_CASE("symmetric products") {
  CHECK(predict_symmetric_product_sizes(std::vector<int>{3, 3}) == SizeSet({2}));
  CHECK(predict_symmetric_product_sizes(std::vector<int>{3, 3, 3, 3}) == SizeSet({2, 3, 4}));
  CHECK(predict_symmetric_product_sizes(std::vector<int>{4, 4, 4}) == SizeSet({3, 4, 5, 6}));
  CHECK_THROWS_AS(predict_symmetric_product_sizes(std::vector<int>{1, 3}), DomainError);
  CHECK_THROWS_AS(predict_symmetric_product_sizes(std::vector<int>{5}), DomainError);

  for (const std::vector<int>& degrees :
       {std::vector<int>{3, 3}, {3, 4}, {4, 4}, {3, 5}, {3, 3, 3}, {4, 4, 4}, {3, 3, 4}}) {
    std::vector<PermGroup> factors;
    for (int n : degrees) factors.push_back(symmetric(static_cast<std::size_t>(n)));
    CHECK(minimal_base_sizes(product_action(factors)).sizes ==
          predict_symmetric_product_sizes(degrees));
  }
}

TEST_CASE("product irredundant length") {
  CHECK(predict_product_irredundant(std::vector<int>{2, 2}) == 3);
  CHECK(predict_product_irredundant(std::vector<int>{3, 3, 3}) == 7);
  CHECK(predict_product_irredundant(std::vector<int>{6}) == 6);
  const auto s3 = symmetric(3);
  const auto s4 = symmetric(4);
  CHECK(irredundant_base_sizes(product_action(s3, s3)).sizes.max() == 3);
  CHECK(irredundant_base_sizes(product_action(std::vector<PermGroup>{s4, s4, s4})).sizes.max() ==
        7);
}

TEST_CASE("subset action closed forms") {
  CHECK(subset_action_base_size(9, 2) == 6);
  CHECK(subset_action_base_size(16, 4) == 6);
  CHECK_THROWS_AS(subset_action_base_size(13, 6), DomainError);
  CHECK(subset_action_max_irredundant(7, 2) == 6);
  CHECK(subset_action_max_irredundant(6, 2) == 4);
  for (int k = 1; k <= 6; ++k) CHECK(subset_action_max_irredundant(13, k) == 12);

  // Against computed values on small domains.
  for (int n = 4; n <= 10; ++n)
    for (int k = 1; k * k <= n && k <= 3; ++k) {
      const auto g = k_subset_action(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      if (g.degree() > 50) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(min_base_size(g) == subset_action_base_size(n, k));
    }
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto g = k_subset_action(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      CHECK(irredundant_base_sizes(g).sizes.max() == subset_action_max_irredundant(n, k));
    }
}

TEST_CASE("subset interval replay") {
  const auto r = subset_interval_replay();
  REQUIRE(r.rows.size() == 10);
  CHECK(r.rows[1].n == 13);
  CHECK(r.rows[1].k == 2);
  CHECK(r.rows[1].b == 8);
  CHECK(r.rows.back().n == 14);
  CHECK(r.rows.back().k == 7);
  CHECK(r.rows.back().b == 4);
  for (const auto& row : r.rows) {
    CHECK(row.imax == 12);
    CHECK(row.b > r.target_min);
    CHECK_FALSE(row.recomputed_b.has_value());
  }
  CHECK(r.contradiction);
  CHECK(r.verdict == "interval {3,…,12} not realized");

  const auto small = subset_interval_replay(80);
  CHECK(small.rows[0].recomputed_b == 12);
  CHECK(small.rows[1].recomputed_b == 8);
  CHECK_FALSE(small.rows[2].recomputed_b.has_value());
}
