// One PASS/FAIL line per acceptance criterion. Failing checks are listed
// underneath their criterion. --slow adds the degree 1800/2400 wreath cases.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "basekit/suites.hpp"

using namespace basekit;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Check>(const SuiteOptions&)> run;
};

std::vector<Check> concat(std::initializer_list<std::vector<Check>> parts) {
  std::vector<Check> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions options;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      options.slow = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--slow] [--only N]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "irredundant lengths form an interval on the corpus", checks::interval_property},
      {2, "182-point group realizes M = {1,3,5,7}",
       [](const SuiteOptions& o) { return checks::prescribed_sizes({{1, 3, 5, 7}}, o); }},
      {3, "prescribed M-sets {1},{2},{1,4},{2,5},{3,4,7}",
       [](const SuiteOptions& o) {
         return checks::prescribed_sizes({{1}, {2}, {1, 4}, {2, 5}, {3, 4, 7}}, o);
       }},
      {4, "disjoint products give sumsets of M-sets", checks::disjoint_sumsets},
      {5, "product action M-sets for epsilon 2, 0, 1", checks::product_epsilon},
      {6, "symmetric product M-sets match prediction", checks::symmetric_products},
      {7, "product action Imax matches prediction", checks::product_irredundant},
      {8, "wreath coset actions", checks::wreath_cosets},
      {9, "GL(4,2) on 2-subspaces", checks::gl42_planes},
      {10, "k-subset actions and interval replay", checks::subset_actions},
      {11, "property suites",
       [](const SuiteOptions& o) {
         return concat({checks::pruned_matches_exhaustive(o), checks::witness_orderings(o),
                        checks::heights(o), checks::indicator_properties(o)});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    std::vector<Check> results;
    std::string error;
    try {
      results = c.run(options);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t bad = 0;
    for (const auto& r : results) bad += r.pass ? 0 : 1;
    const bool pass = error.empty() && bad == 0 && !results.empty();
    if (!pass) ++failed;
    std::printf("criterion %2d %s  %s  (%zu checks, %.2fs)\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), results.size(), secs);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (const auto& r : results) {
      if (r.pass) continue;
      std::printf("    %s: expected %s, computed %s\n", r.description.c_str(),
                  r.expected.c_str(), r.computed.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
