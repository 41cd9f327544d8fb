#include "basekit/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "basekit/closed_forms.hpp"
#include "basekit/constructions.hpp"
#include "basekit/error.hpp"
#include "basekit/spec_json.hpp"

namespace basekit {

namespace {

using nlohmann::json;

json witness_json(const std::map<int, std::vector<Point>>& witnesses) {
  json out = json::object();
  for (const auto& [size, points] : witnesses) out[std::to_string(size)] = points;
  return out;
}

const char* mode_name(SearchMode m) {
  return m == SearchMode::Exhaustive ? "exhaustive" : "pruned";
}

struct Computed {
  SizeSearchResult m;
  SizeSearchResult i;
  int height = 0;
  std::uint64_t nodes = 0;
};

Computed compute(const PermGroup& g, const SearchOptions& options) {
  Computed c;
  if (options.mode == SearchMode::Pruned) {
    BaseAnalyzer analyzer(g, options);
    c.m = analyzer.minimal_sizes();
    c.i = analyzer.irredundant_sizes();
    c.height = analyzer.height();
    c.nodes = analyzer.nodes();
  } else {
    c.m = minimal_base_sizes(g, options);
    c.i = irredundant_base_sizes(g, options);
    SearchOptions rest = options;
    rest.budget = options.budget - std::min(options.budget, c.m.nodes + c.i.nodes);
    c.height = height(g, rest);
    c.nodes = c.m.nodes + c.i.nodes;
  }
  return c;
}

}  // namespace

json analyze(const json& document, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const GroupSpec spec = parse_group_spec(document);
  const Construction built = build_group(spec);
  const PermGroup& g = built.group;
  if (g.is_trivial()) throw DomainError("the spec builds the trivial group, which has no base");

  const Computed c = compute(g, options.search);
  json anomalies = json::array();

  json cross = {{"performed", false}};
  if (options.search.mode == SearchMode::Pruned && g.degree() <= options.cross_check_max_degree) {
    SearchOptions ex = options.search;
    ex.mode = SearchMode::Exhaustive;
    ex.witnesses = false;
    const Computed e = compute(g, ex);
    const bool agree = e.m.sizes == c.m.sizes && e.i.sizes == c.i.sizes && e.height == c.height;
    cross = {{"performed", true}, {"agree", agree}};
    if (!agree) anomalies.push_back("pruned and exhaustive searches disagree");
  }

  const SizeSet& m = c.m.sizes;
  const SizeSet& i = c.i.sizes;
  if (!i.is_interval()) anomalies.push_back("I-set is not an interval");
  if (!m.is_subset_of(i)) anomalies.push_back("M-set is not contained in the I-set");
  if (m.min() != i.min()) anomalies.push_back("M-set and I-set have different minima");

  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["spec"] = document;
  report["description"] = describe(spec);
  report["degree"] = g.degree();
  report["order"] = g.order();
  report["transitive"] = is_transitive(g);
  report["b"] = m.min();
  report["B"] = m.max();
  report["Imax"] = i.max();
  report["M_set"] = m.sizes();
  report["I_set"] = i.sizes();
  report["I_is_interval"] = i.is_interval();
  report["is_ibis"] = i.count() == 1;
  report["is_mibis"] = m.count() == 1;
  report["height"] = c.height;
  report["mode"] = mode_name(options.search.mode);
  report["cross_check"] = cross;
  report["budget"] = {{"limit", options.search.budget}, {"exceeded", false}};
  report["timing"] = {{"search_nodes", c.nodes}};
  if (options.wall_time)
    report["timing"]["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
  report["anomalies"] = anomalies;
  if (options.search.witnesses)
    report["witnesses"] = {{"minimal_bases", witness_json(c.m.witnesses)},
                           {"irredundant_bases", witness_json(c.i.witnesses)}};
  return report;
}

std::string render_table(const json& r) {
  auto sizes = [](const json& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
    return s + "}";
  };
  auto yes = [](const json& v) { return v.get<bool>() ? "yes" : "no"; };
  std::vector<std::pair<std::string, std::string>> rows{
      {"group", r.at("description").get<std::string>()},
      {"degree", r.at("degree").dump()},
      {"order", r.at("order").dump()},
      {"transitive", yes(r.at("transitive"))},
      {"b", r.at("b").dump()},
      {"B", r.at("B").dump()},
      {"Imax", r.at("Imax").dump()},
      {"M-set", sizes(r.at("M_set"))},
      {"I-set", sizes(r.at("I_set"))},
      {"I interval", yes(r.at("I_is_interval"))},
      {"IBIS", yes(r.at("is_ibis"))},
      {"MiBIS", yes(r.at("is_mibis"))},
      {"height", r.at("height").dump()},
      {"mode", r.at("mode").get<std::string>()},
      {"search nodes", r.at("timing").at("search_nodes").dump()},
  };
  if (r.at("cross_check").at("performed").get<bool>())
    rows.emplace_back("exhaustive check", r.at("cross_check").at("agree").get<bool>() ? "agrees"
                                                                                     : "DISAGREES");
  if (r.at("timing").contains("wall_ms"))
    rows.emplace_back("wall ms", r.at("timing").at("wall_ms").dump());
  if (r.contains("witnesses"))
    for (const char* kind : {"minimal_bases", "irredundant_bases"})
      for (const auto& [size, points] : r.at("witnesses").at(kind).items())
        rows.emplace_back(std::string(kind[0] == 'm' ? "minimal " : "irredundant ") + size,
                          points.dump());
  for (const auto& a : r.at("anomalies")) rows.emplace_back("ANOMALY", a.get<std::string>());

  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  return out.str();
}

json probe_epsilon(const json& first, const json& second, const SearchOptions& options) {
  const GroupSpec a = parse_group_spec(first);
  const GroupSpec b = parse_group_spec(second);
  const PermGroup g = build_group(a).group;
  const PermGroup h = build_group(b).group;
  if (g.is_trivial() || h.is_trivial()) throw DomainError("both factors must be non-trivial");

  SearchOptions plain = options;
  plain.witnesses = false;
  const SizeSet mg = minimal_base_sizes(g, plain).sizes;
  const SizeSet mh = minimal_base_sizes(h, plain).sizes;
  const SizeSet mp = minimal_base_sizes(product_action(g, h), plain).sizes;
  const auto prediction = predict_product_interval(mg.min(), mh.min(), mg.max(), mh.max());
  const auto eps = prediction.measure(mp);

  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["factors"] = {describe(a), describe(b)};
  out["factor_M_sets"] = {mg.sizes(), mh.sizes()};
  out["prediction"] = {{"lower", prediction.lower},
                       {"upper_by_epsilon", prediction.upper_by_epsilon}};
  out["product_M_set"] = mp.sizes();
  out["measured_epsilon"] = eps ? json(*eps) : json(nullptr);
  if (!eps) out["anomaly"] = "product M-set matches no epsilon in {0,1,2}";
  const auto ta = indecomposable_tag(first);
  const auto tb = indecomposable_tag(second);
  if (ta && tb) {
    const int suggested = *ta && *tb ? 2 : (!*ta && !*tb ? 0 : 1);
    out["conjectured_epsilon"] = suggested;
    out["matches_conjecture"] = eps && *eps == suggested;
  } else {
    out["conjectured_epsilon"] = nullptr;
  }
  return out;
}

}  // namespace basekit
