#pragma once

#include <string>

#include "json.hpp"

#include "basekit/analytics.hpp"

namespace basekit {

inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  SearchOptions search;
  /// In pruned mode, rerun every search exhaustively for degrees up to this.
  std::size_t cross_check_max_degree = 30;
  /// Adds wall-clock milliseconds (makes the report run-dependent).
  bool wall_time = false;
};

/**
 * Full report for one group spec document. Fields: schema_version, spec,
 * description, degree, order, transitive, b, B, Imax, M_set, I_set,
 * I_is_interval, is_ibis, is_mibis, height, mode, cross_check, budget,
 * timing, anomalies, and witnesses on request.
 *
 * A non-empty "anomalies" array flags broken invariants (for instance an
 * I-set that is not an interval). Throws DomainError for malformed specs
 * or the trivial group, BudgetExceeded when the search ceiling is hit.
 */
nlohmann::json analyze(const nlohmann::json& spec_document, const AnalyzeOptions& options = {});

/// Plain-text table rendered from an analyze() report.
std::string render_table(const nlohmann::json& report);

/**
 * Product action of two specs: prediction from the factors' b and B,
 * computed M-set, measured epsilon and, when both documents carry the
 * "indecomposable" tag, the epsilon the tags suggest (2 if both are
 * indecomposable, 0 if neither is, 1 otherwise).
 */
nlohmann::json probe_epsilon(const nlohmann::json& first, const nlohmann::json& second,
                             const SearchOptions& options = {});

}  // namespace basekit
