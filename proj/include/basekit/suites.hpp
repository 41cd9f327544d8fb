#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "basekit/constructions.hpp"

namespace basekit {

struct Check {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  bool passed() const;
};

struct SuiteOptions {
  bool slow = false;
  std::uint64_t budget = 100'000'000;
};

/// thm1, thm2, lemma-sumset, thm41, prodsym, lemma-aux, thm3, section5,
/// gl42, section6, heights, lemmavect.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

nlohmann::json to_json(const SuiteResult& result);
std::string render_table(const SuiteResult& result);

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
};

/// Named constructions plus random 2-generator subgroups of S_8.
std::vector<CorpusEntry> interval_corpus();

/// The groups of checks the suites are assembled from.
namespace checks {
std::vector<Check> interval_property(const SuiteOptions& o);
std::vector<Check> pruned_matches_exhaustive(const SuiteOptions& o);
std::vector<Check> witness_orderings(const SuiteOptions& o);
std::vector<Check> prescribed_sizes(const std::vector<std::vector<int>>& targets,
                                    const SuiteOptions& o);
std::vector<Check> disjoint_sumsets(const SuiteOptions& o);
std::vector<Check> product_epsilon(const SuiteOptions& o);
std::vector<Check> symmetric_products(const SuiteOptions& o);
std::vector<Check> product_irredundant(const SuiteOptions& o);
std::vector<Check> interval_products(const SuiteOptions& o);
std::vector<Check> wreath_cosets(const SuiteOptions& o);
std::vector<Check> gl42_planes(const SuiteOptions& o);
std::vector<Check> subset_actions(const SuiteOptions& o);
std::vector<Check> heights(const SuiteOptions& o);
std::vector<Check> indicator_properties(const SuiteOptions& o);
}  // namespace checks

}  // namespace basekit
