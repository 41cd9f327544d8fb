#include "basekit/suites.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "basekit/analytics.hpp"
#include "basekit/closed_forms.hpp"
#include "basekit/error.hpp"
#include "basekit/spec_json.hpp"

namespace basekit {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

using nlohmann::json;

SearchOptions search(const SuiteOptions& o, bool witnesses = false,
                     SearchMode mode = SearchMode::Pruned) {
  return {mode, o.budget, witnesses};
}

Check same(std::string description, const std::string& expected, const std::string& computed) {
  const bool pass = expected == computed;
  return {std::move(description), expected, computed, pass};
}

Check same(std::string description, long long expected, long long computed) {
  return same(std::move(description), std::to_string(expected), std::to_string(computed));
}

Check holds(std::string description, bool ok, std::string computed = {}) {
  return {std::move(description), "true", computed.empty() ? (ok ? "true" : "false") : computed,
          ok};
}

GroupSpec sym(std::size_t n) { return {spec::Sym{n}}; }
GroupSpec cyclic(std::size_t p) { return {spec::CyclicRegular{p}}; }
GroupSpec elem(std::uint32_t p, std::uint32_t d) { return {spec::ElemAbelianRegular{p, d}}; }
GroupSpec prescribed(std::vector<int> x) { return {spec::PrescribedSizes{std::move(x), 2}}; }
GroupSpec product(std::vector<GroupSpec> f) { return {spec::ProductAction{std::move(f)}}; }
GroupSpec disjoint(std::vector<GroupSpec> f) { return {spec::DisjointProduct{std::move(f)}}; }

PermGroup build(const GroupSpec& s) { return build_group(s).group; }

std::string show(const SizeSet& s) { return s.to_string(); }

std::vector<GroupSpec> sumset_pieces() {
  return {sym(3), sym(4), cyclic(3), elem(2, 2), prescribed({1, 3})};
}

std::vector<std::pair<GroupSpec, GroupSpec>> product_pairs() {
  const auto s3s3 = product({sym(3), sym(3)});
  return {{sym(3), sym(3)},   {sym(3), sym(4)},      {sym(4), sym(4)},     {sym(3), sym(5)},
          {sym(3), cyclic(3)}, {cyclic(3), elem(2, 2)}, {sym(4), elem(2, 2)}, {sym(3), s3s3},
          {sym(4), s3s3},      {s3s3, s3s3}};
}

// Deterministic Fisher-Yates.
template <class T>
void shuffle_with(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

std::vector<CorpusEntry> interval_corpus() {
  std::vector<GroupSpec> named;
  for (std::size_t n : {3, 4, 5, 6}) named.push_back(sym(n));
  named.push_back(cyclic(3));
  named.push_back(cyclic(5));
  named.push_back(elem(2, 2));
  named.push_back(elem(2, 3));
  named.push_back(elem(3, 2));
  for (const auto& x : std::vector<std::vector<int>>{{1}, {2}, {1, 3}, {1, 4}, {2, 5}, {3, 4, 7}, {1, 3, 5, 7}})
    named.push_back(prescribed(x));
  const auto pieces = sumset_pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) named.push_back(disjoint({pieces[i], pieces[j]}));
  const auto s3s3 = product({sym(3), sym(3)});
  named.push_back(s3s3);
  named.push_back(product({sym(4), sym(4)}));
  named.push_back(product({sym(3), sym(4)}));
  named.push_back(product({sym(3), sym(3), sym(3)}));
  named.push_back(product({sym(3), sym(3), sym(3), sym(3)}));
  named.push_back(product({sym(4), s3s3}));
  named.push_back(product({s3s3, s3s3}));
  named.push_back({spec::IntervalProduct{2, 3, SizeKind::Minimal}});
  named.push_back({spec::IntervalProduct{3, 5, SizeKind::Minimal}});
  named.push_back({spec::IntervalProduct{2, 4, SizeKind::Irredundant}});
  named.push_back({spec::WreathCoset{4, 2}});
  named.push_back({spec::WreathCoset{4, 3}});
  named.push_back({spec::KSubsets{6, 2}});
  named.push_back({spec::KSubsets{7, 2}});
  named.push_back({spec::KSubsets{9, 2}});
  named.push_back({spec::GL42Planes{}});

  std::vector<CorpusEntry> out;
  for (auto& s : named) out.push_back({describe(s), std::move(s)});

  std::mt19937_64 rng(20240601);
  for (int i = 1; i <= 20; ++i) {
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Point> images(8);
      for (Point x = 0; x < 8; ++x) images[x] = x;
      shuffle_with(images, rng);
      gens.emplace_back(std::move(images));
    }
    GroupSpec s{spec::Explicit{8, std::move(gens)}};
    out.push_back({"random subgroup of Sym(8) #" + std::to_string(i), std::move(s)});
  }
  return out;
}

namespace checks {

std::vector<Check> interval_property(const SuiteOptions& o) {
  std::vector<Check> out;
  for (const auto& entry : interval_corpus()) {
    const PermGroup g = build(entry.spec);
    if (g.is_trivial()) continue;
    const SizeSet i = irredundant_base_sizes(g, search(o)).sizes;
    out.push_back({"I-set of " + entry.name + " is an interval", "interval",
                   show(i) + (i.is_interval() ? "" : " (gap)"), i.is_interval()});
  }
  return out;
}

std::vector<Check> pruned_matches_exhaustive(const SuiteOptions& o) {
  std::vector<Check> out;
  for (const auto& entry : interval_corpus()) {
    const PermGroup g = build(entry.spec);
    if (g.is_trivial() || g.degree() > 30) continue;
    const auto ex = search(o, false, SearchMode::Exhaustive);
    const auto m = minimal_base_sizes(g, search(o)).sizes;
    const auto i = irredundant_base_sizes(g, search(o)).sizes;
    out.push_back(same("exhaustive M-set of " + entry.name, show(m),
                        show(minimal_base_sizes(g, ex).sizes)));
    out.push_back(same("exhaustive I-set of " + entry.name, show(i),
                        show(irredundant_base_sizes(g, ex).sizes)));
  }
  return out;
}

std::vector<Check> witness_orderings(const SuiteOptions& o) {
  std::vector<Check> out;
  std::mt19937_64 rng(7);
  for (const auto& entry : interval_corpus()) {
    const PermGroup g = build(entry.spec);
    if (g.is_trivial()) continue;
    const auto m = minimal_base_sizes(g, search(o, true));
    std::size_t tried = 0;
    std::size_t good = 0;
    for (const auto& [size, base] : m.witnesses) {
      std::vector<std::vector<Point>> orders;
      auto p = base;
      std::sort(p.begin(), p.end());
      if (p.size() <= 4) {
        do orders.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
      } else {
        for (int s = 0; s < 24; ++s) {
          shuffle_with(p, rng);
          orders.push_back(p);
        }
      }
      for (const auto& seq : orders) {
        ++tried;
        if (is_irredundant_sequence(g, seq)) ++good;
      }
    }
    out.push_back(same("orderings of minimal-base witnesses of " + entry.name + " are irredundant",
                        std::to_string(tried) + "/" + std::to_string(tried),
                        std::to_string(good) + "/" + std::to_string(tried)));
  }
  return out;
}

std::vector<Check> prescribed_sizes(const std::vector<std::vector<int>>& targets,
                                    const SuiteOptions& o) {
  std::vector<Check> out;
  for (const auto& x : targets) {
    const auto c = prescribed_sizes_group(x, 2);
    const SizeSet want(x);
    if (x == std::vector<int>{1, 3, 5, 7})
      out.push_back(same("degree of prescribed M " + want.to_string(), 182,
                          static_cast<long long>(c.group.degree())));
    out.push_back(same("M-set of prescribed M " + want.to_string(), show(want),
                        show(minimal_base_sizes(c.group, search(o)).sizes)));
  }
  return out;
}

std::vector<Check> disjoint_sumsets(const SuiteOptions& o) {
  std::vector<Check> out;
  const auto pieces = sumset_pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const auto mg = minimal_base_sizes(build(pieces[i]), search(o)).sizes;
      const auto mh = minimal_base_sizes(build(pieces[j]), search(o)).sizes;
      const auto whole = disjoint({pieces[i], pieces[j]});
      out.push_back(same("M-set of " + describe(whole) + " is the sumset", show(sumset(mg, mh)),
                          show(minimal_base_sizes(build(whole), search(o)).sizes)));
    }
  return out;
}

std::vector<Check> product_epsilon(const SuiteOptions& o) {
  std::vector<Check> out;
  const auto s3s3 = product({sym(3), sym(3)});
  struct Case {
    GroupSpec g, h;
    std::string m;  // expected M-set, empty when only the maximum is pinned
    int max;
    int eps;
  };
  const std::vector<Case> cases{{sym(3), sym(3), "{2}", 2, 2},
                                {s3s3, s3s3, "{2,3,4}", 4, 0},
                                {sym(4), s3s3, "", 4, 1}};
  for (const auto& c : cases) {
    const auto mg = minimal_base_sizes(build(c.g), search(o)).sizes;
    const auto mh = minimal_base_sizes(build(c.h), search(o)).sizes;
    const auto whole = product({c.g, c.h});
    const auto m = minimal_base_sizes(build(whole), search(o)).sizes;
    const auto prediction = predict_product_interval(mg.min(), mh.min(), mg.max(), mh.max());
    const std::string name = describe(whole);
    if (!c.m.empty()) out.push_back(same("M-set of " + name, c.m, show(m)));
    out.push_back(same("max M of " + name, c.max, m.max()));
    out.push_back(same("max M of " + name + " against B(G)+B(H)-eps", c.max,
                        mg.max() + mh.max() - c.eps));
    const auto eps = prediction.measure(m);
    out.push_back(same("measured epsilon of " + name, std::to_string(c.eps),
                        eps ? std::to_string(*eps) : "none"));
    out.push_back(holds("M-set of " + name + " is an interval from max(b_G, b_H) = " +
                            std::to_string(prediction.lower),
                        m.is_interval() && m.min() == prediction.lower, show(m)));
  }
  return out;
}

std::vector<Check> symmetric_products(const SuiteOptions& o) {
  std::vector<Check> out;
  const std::vector<std::pair<std::vector<int>, std::string>> cases{
      {{3, 3}, "{2}"}, {{4, 4}, "{3,4}"}, {{3, 3, 3, 3}, "{2,3,4}"}, {{4, 4, 4}, "{3,4,5,6}"}};
  for (const auto& [degrees, expected] : cases) {
    std::vector<GroupSpec> f;
    int max_b = 0;
    int max_big_b = 0;
    for (int n : degrees) {
      f.push_back(sym(static_cast<std::size_t>(n)));
      const auto m = minimal_base_sizes(symmetric(static_cast<std::size_t>(n)), search(o)).sizes;
      max_b = std::max(max_b, m.min());
      max_big_b = std::max(max_big_b, m.max());
    }
    const auto whole = product(f);
    const auto m = minimal_base_sizes(build(whole), search(o)).sizes;
    out.push_back(same("M-set of " + describe(whole), expected, show(m)));
    out.push_back(same("M-set of " + describe(whole) + " against the closed form",
                        show(predict_symmetric_product_sizes(degrees)), show(m)));
    out.push_back(same("max b and max B of the factors of " + describe(whole) + " coincide",
                        max_big_b, max_b));
  }
  return out;
}

std::vector<Check> product_irredundant(const SuiteOptions& o) {
  std::vector<Check> out;
  const std::vector<std::pair<std::vector<std::size_t>, int>> cases{
      {{3, 4}, 4}, {{3, 3, 3}, 4}, {{4, 4, 4}, 7}};
  for (const auto& [degrees, expected] : cases) {
    std::vector<GroupSpec> f;
    std::vector<int> factor_imax;
    for (std::size_t n : degrees) {
      f.push_back(sym(n));
      factor_imax.push_back(irredundant_base_sizes(symmetric(n), search(o)).sizes.max());
    }
    const auto whole = product(f);
    const int imax = irredundant_base_sizes(build(whole), search(o)).sizes.max();
    out.push_back(same("Imax of " + describe(whole), expected, imax));
    out.push_back(same("Imax of " + describe(whole) + " against the factor formula",
                        predict_product_irredundant(factor_imax), imax));
  }
  return out;
}

std::vector<Check> interval_products(const SuiteOptions& o) {
  std::vector<Check> out;
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4},
                                               {3, 5}, {2, 5}, {4, 6}};
  for (const auto& [a, b] : cases) {
    const auto want = show(SizeSet::interval(a, b));
    const GroupSpec m{spec::IntervalProduct{a, b, SizeKind::Minimal}};
    const GroupSpec i{spec::IntervalProduct{a, b, SizeKind::Irredundant}};
    out.push_back(same("M-set of " + describe(m), want,
                        show(minimal_base_sizes(build(m), search(o)).sizes)));
    out.push_back(same("I-set of " + describe(i), want,
                        show(irredundant_base_sizes(build(i), search(o)).sizes)));
  }
  return out;
}

std::vector<Check> wreath_cosets(const SuiteOptions& o) {
  std::vector<Check> out;
  struct Case {
    std::size_t n, k, degree;
    std::string m;
  };
  std::vector<Case> cases{{4, 2, 192, "{2,4}"}, {4, 3, 288, "{3,4}"}};
  if (o.slow) {
    cases.push_back({5, 3, 1800, "{3,5}"});
    cases.push_back({5, 4, 2400, "{4,5,8}"});
  }
  for (const auto& c : cases) {
    const GroupSpec s{spec::WreathCoset{c.n, c.k}};
    const PermGroup g = build(s);
    const std::string name = describe(s);
    out.push_back(same("degree of " + name, static_cast<long long>(c.degree),
                        static_cast<long long>(g.degree())));
    if (c.n == 4 && c.k == 3)
      out.push_back(same("order of " + name, 41472, static_cast<long long>(g.order())));
    out.push_back(same("M-set of " + name, c.m, show(minimal_base_sizes(g, search(o)).sizes)));
  }
  return out;
}

std::vector<Check> gl42_planes(const SuiteOptions& o) {
  std::vector<Check> out;
  const PermGroup g = gl42_on_2subspaces();
  BaseAnalyzer a(g, search(o));
  const auto m = a.minimal_sizes().sizes;
  const auto i = a.irredundant_sizes().sizes;
  out.push_back(same("degree of GL(4,2) on 2-subspaces", 35, static_cast<long long>(g.degree())));
  out.push_back(same("order of GL(4,2)", 20160, static_cast<long long>(g.order())));
  out.push_back(same("M-set of GL(4,2) on 2-subspaces", "{4}", show(m)));
  out.push_back(same("I-set of GL(4,2) on 2-subspaces", "{4,5}", show(i)));
  out.push_back(same("GL(4,2) on 2-subspaces is MiBIS and not IBIS", "MiBIS, not IBIS",
                      std::string(m.count() == 1 ? "MiBIS" : "not MiBIS") + ", " +
                          (i.count() == 1 ? "IBIS" : "not IBIS")));
  return out;
}

std::vector<Check> subset_actions(const SuiteOptions& o) {
  std::vector<Check> out;
  out.push_back(same("Imax of Sym(6) on 2-subsets", 4,
                      irredundant_base_sizes(k_subset_action(6, 2), search(o)).sizes.max()));
  out.push_back(same("Imax of Sym(7) on 2-subsets", 6,
                      irredundant_base_sizes(k_subset_action(7, 2), search(o)).sizes.max()));
  const int b92 = min_base_size(k_subset_action(9, 2), search(o));
  out.push_back(same("b of Sym(9) on 2-subsets", 6, b92));
  out.push_back(same("b of Sym(9) on 2-subsets against the closed form",
                      subset_action_base_size(9, 2), b92));
  out.push_back(same("closed-form Imax of Sym(6) on 2-subsets", 4, subset_action_max_irredundant(6, 2)));
  out.push_back(same("closed-form Imax of Sym(7) on 2-subsets", 6, subset_action_max_irredundant(7, 2)));

  const auto replay = subset_interval_replay(o.slow ? std::numeric_limits<std::size_t>::max() : 0);
  for (const auto& row : replay.rows) {
    const std::string tag = "Sym(" + std::to_string(row.n) + ") on " + std::to_string(row.k) +
                            "-subsets (gcd " + std::to_string(row.gcd) + ")";
    out.push_back(same("Imax of " + tag + " by the closed form", replay.target_max, row.imax));
    out.push_back(holds("b of " + tag + " from the published table exceeds " +
                            std::to_string(replay.target_min),
                        row.b > replay.target_min, "b = " + std::to_string(row.b)));
    if (row.recomputed_b)
      out.push_back(same("recomputed b of " + tag, row.b, *row.recomputed_b));
  }
  out.push_back(same("verdict (" + replay.source_note + ")", "interval {3,…,12} not realized",
                      replay.verdict));
  return out;
}

std::vector<Check> heights(const SuiteOptions& o) {
  std::vector<Check> out;
  for (const auto& s : {cyclic(2), cyclic(3), cyclic(5), elem(2, 2), elem(2, 3), elem(3, 2),
                        prescribed({1})})
    out.push_back(same("height of regular " + describe(s), 1, height(build(s), search(o))));
  out.push_back(same("height of Sym(5)", 4, height(symmetric(5), search(o))));
  for (const auto& [g, h] : product_pairs()) {
    const int hg = height(build(g), search(o));
    const int hh = height(build(h), search(o));
    const auto whole = product({g, h});
    const int hp = height(build(whole), search(o));
    out.push_back(holds("height of " + describe(whole) + " <= " + std::to_string(hg) + " + " +
                            std::to_string(hh),
                        hp <= hg + hh, std::to_string(hp)));
  }
  return out;
}

std::vector<Check> indicator_properties(const SuiteOptions& o) {
  std::vector<Check> out;
  for (const auto& [gs, hs] : product_pairs()) {
    const PermGroup g = build(gs);
    const PermGroup h = build(hs);
    const int big_b_g = minimal_base_sizes(g, search(o)).sizes.max();
    const int big_b_h = minimal_base_sizes(h, search(o)).sizes.max();
    const auto whole = product({gs, hs});
    const auto m = minimal_base_sizes(build(whole), search(o, true));
    for (const auto& [k, base] : m.witnesses) {
      std::vector<GridPoint> grid;
      for (Point x : base)
        grid.emplace_back(static_cast<Point>(x / h.degree()), static_cast<Point>(x % h.degree()));
      const auto v = indicator_vectors(g, h, grid);
      bool none_zero = true;
      bool distinct = true;
      bool complementary = true;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        none_zero = none_zero && (v.vG[i] || v.vH[i]);
        complementary = complementary && v.vG[i] != v.vH[i];
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
          if (v.vG[i] && v.vG[j] && grid[i].first == grid[j].first) distinct = false;
          if (v.vH[i] && v.vH[j] && grid[i].second == grid[j].second) distinct = false;
        }
      }
      const std::string tag = describe(whole) + ", witness of size " + std::to_string(k);
      const std::string counts = "nG=" + std::to_string(v.nG) + " nH=" + std::to_string(v.nH);
      out.push_back(holds(tag + ": nG <= B(G) and nH <= B(H)",
                          v.nG <= big_b_g && v.nH <= big_b_h, counts));
      out.push_back(holds(tag + ": no position with vG = vH = 0, so nG + nH >= k",
                          none_zero && v.nG + v.nH >= k, counts));
      out.push_back(holds(tag + ": marked positions have distinct coordinates", distinct));
      if (k == big_b_g + big_b_h) {
        out.push_back(holds(tag + ": nG = B(G) and nH = B(H)",
                            v.nG == big_b_g && v.nH == big_b_h, counts));
        out.push_back(holds(tag + ": vG and vH differ everywhere", complementary));
      }
    }
  }
  return out;
}

}  // namespace checks

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1",      "thm2",    "lemma-sumset", "thm41",
                                              "prodsym",   "lemma-aux", "thm3",       "section5",
                                              "gl42",      "section6", "heights",     "lemmavect"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  SuiteResult r{name, {}};
  auto add = [&](std::vector<Check> c) {
    r.checks.insert(r.checks.end(), std::make_move_iterator(c.begin()),
                    std::make_move_iterator(c.end()));
  };
  if (name == "thm1") {
    add(checks::interval_property(o));
    add(checks::pruned_matches_exhaustive(o));
    add(checks::witness_orderings(o));
  } else if (name == "thm2") {
    add(checks::prescribed_sizes({{1}, {2}, {1, 4}, {2, 5}, {1, 3, 5, 7}, {3, 4, 7}}, o));
  } else if (name == "lemma-sumset") {
    add(checks::disjoint_sumsets(o));
  } else if (name == "thm41") {
    add(checks::product_epsilon(o));
  } else if (name == "prodsym") {
    add(checks::symmetric_products(o));
  } else if (name == "lemma-aux") {
    add(checks::product_irredundant(o));
  } else if (name == "thm3") {
    add(checks::interval_products(o));
  } else if (name == "section5") {
    add(checks::wreath_cosets(o));
  } else if (name == "gl42") {
    add(checks::gl42_planes(o));
  } else if (name == "section6") {
    add(checks::subset_actions(o));
  } else if (name == "heights") {
    add(checks::heights(o));
  } else if (name == "lemmavect") {
    add(checks::indicator_properties(o));
  } else {
    throw DomainError("unknown suite \"" + name + "\"");
  }
  return r;
}

json to_json(const SuiteResult& result) {
  json checks = json::array();
  for (const auto& c : result.checks)
    checks.push_back({{"check", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  return {{"schema_version", 1},
          {"suite", result.name},
          {"checks", checks},
          {"passed", result.passed()}};
}

std::string render_table(const SuiteResult& result) {
  std::ostringstream out;
  for (const auto& c : result.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.description << ": expected " << c.expected
        << ", computed " << c.computed << '\n';
  }
  out << result.name << ": " << (result.passed() ? "passed" : "FAILED") << " ("
      << std::count_if(result.checks.begin(), result.checks.end(),
                       [](const Check& c) { return c.pass; })
      << "/" << result.checks.size() << " checks)\n";
  return out.str();
}

}  // namespace basekit
