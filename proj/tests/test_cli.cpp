#include <cstdlib>
#include <fstream>
#include <string>

#include "basekit/error.hpp"
#include "basekit/report.hpp"
#include "basekit/spec_json.hpp"
#include "basekit/suites.hpp"
#include "doctest.h"

using namespace basekit;
using nlohmann::json;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(BASEKIT_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string temp_spec(const std::string& name, const std::string& text) {
  const std::string path = std::string(BASEKIT_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("spec documents round trip") {
  const std::vector<std::string> docs{
      R"({"type":"sym","n":5})",
      R"({"type":"cyclic","p":3})",
      R"({"type":"elem_abelian","d":3,"p":2})",
      R"({"factors":[{"n":3,"type":"sym"},{"p":2,"type":"cyclic"}],"type":"disjoint_product"})",
      R"({"factors":[{"n":3,"type":"sym"},{"n":3,"type":"sym"}],"type":"product_action"})",
      R"({"X":[1,3,5,7],"p":2,"type":"theorem2"})",
      R"({"a":2,"b":4,"type":"theorem3_m"})",
      R"({"a":2,"b":4,"type":"theorem3_i"})",
      R"({"k":3,"n":4,"type":"wreath_coset"})",
      R"({"k":2,"n":6,"type":"k_subsets"})",
      R"({"type":"gl42_planes"})",
      R"({"degree":3,"generators":[[1,0,2],[1,2,0]],"type":"explicit"})",
  };
  for (const auto& d : docs) {
    CAPTURE(d);
    const json j = json::parse(d);
    CHECK(to_json(parse_group_spec(j)) == j);
  }
  CHECK(to_json(parse_group_spec(json::parse(R"({"type":"theorem2","X":[1,2]})"))).at("p") == 2);
  CHECK(indecomposable_tag(json::parse(R"({"type":"sym","n":3,"indecomposable":true})")) == true);
  CHECK_FALSE(indecomposable_tag(json::parse(R"({"type":"sym","n":3})")).has_value());
}

TEST_CASE("malformed spec documents") {
  for (const char* bad : {
           R"([1,2])",
           R"({"n":3})",
           R"({"type":"sym"})",
           R"({"type":"sym","n":-1})",
           R"({"type":"sym","n":3,"extra":1})",
           R"({"type":"elem_abelian","p":4,"d":2})",
           R"({"type":"product_action","factors":[]})",
           R"({"type":"theorem2","X":[]})",
           R"({"type":"theorem3_m","a":1,"b":3})",
           R"({"type":"wreath_coset","n":2,"k":2})",
           R"({"type":"k_subsets","n":5,"k":3})",
           R"({"type":"explicit","degree":3,"generators":[[0,0,1]]})",
           R"({"type":"explicit","degree":3,"generators":[[0,1]]})",
           R"({"type":"sym","n":3,"indecomposable":"yes"})",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(json::parse(bad)), DomainError);
  }
}

TEST_CASE("reports") {
  const json s5 = analyze(json::parse(R"({"type":"sym","n":5})"));
  CHECK(s5.at("b") == 4);
  CHECK(s5.at("B") == 4);
  CHECK(s5.at("Imax") == 4);
  CHECK(s5.at("height") == 4);
  CHECK(s5.at("order") == 120);
  CHECK(s5.at("is_ibis") == true);
  CHECK(s5.at("cross_check").at("agree") == true);
  CHECK(s5.at("anomalies").empty());
  CHECK(s5.at("schema_version") == kReportSchemaVersion);

  const json gl = analyze(json::parse(R"({"type":"gl42_planes"})"));
  CHECK(gl.at("M_set") == json::array({4}));
  CHECK(gl.at("I_set") == json::array({4, 5}));
  CHECK(gl.at("is_mibis") == true);
  CHECK(gl.at("is_ibis") == false);

  const json t2 = analyze(json::parse(R"({"type":"theorem2","X":[1,3,5,7],"p":2})"));
  CHECK(t2.at("M_set") == json::array({1, 3, 5, 7}));
  CHECK(t2.at("degree") == 182);

  AnalyzeOptions ex;
  ex.search.mode = SearchMode::Exhaustive;
  ex.search.witnesses = true;
  const json s3s3 =
      analyze(json::parse(R"({"type":"product_action","factors":[{"type":"sym","n":3},{"type":"sym","n":3}]})"), ex);
  CHECK(s3s3.at("mode") == "exhaustive");
  CHECK(s3s3.at("M_set") == json::array({2}));
  CHECK(s3s3.at("I_set") == json::array({2, 3}));
  CHECK(s3s3.at("witnesses").at("irredundant_bases").size() == 2);

  // Same flags, same bytes.
  const auto spec = json::parse(R"({"type":"wreath_coset","n":4,"k":3})");
  AnalyzeOptions w;
  w.search.witnesses = true;
  CHECK(analyze(spec, w).dump() == analyze(spec, w).dump());

  CHECK_THROWS_AS(analyze(json::parse(R"({"type":"sym","n":1})")), DomainError);
  AnalyzeOptions tight;
  tight.search.budget = 3;
  CHECK_THROWS_AS(analyze(json::parse(R"({"type":"sym","n":8})"), tight), BudgetExceeded);

  const auto table = render_table(gl);
  CHECK(table.find("M-set") != std::string::npos);
  CHECK(table.find("{4,5}") != std::string::npos);
}

TEST_CASE("epsilon probe") {
  const auto s3 = json::parse(R"({"type":"sym","n":3,"indecomposable":true})");
  const auto s4 = json::parse(R"({"type":"sym","n":4})");
  const auto pair = json::parse(
      R"({"type":"product_action","factors":[{"type":"sym","n":3},{"type":"sym","n":3}],"indecomposable":false})");
  auto r = probe_epsilon(s3, s3);
  CHECK(r.at("measured_epsilon") == 2);
  CHECK(r.at("matches_conjecture") == true);
  r = probe_epsilon(pair, pair);
  CHECK(r.at("measured_epsilon") == 0);
  CHECK(r.at("product_M_set") == json::array({2, 3, 4}));
  r = probe_epsilon(s4, pair);
  CHECK(r.at("measured_epsilon") == 1);
  CHECK(r.at("conjectured_epsilon").is_null());
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 12);
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
  CHECK(interval_corpus().size() >= 50);
  for (const char* name : {"thm2", "gl42", "lemma-aux", "prodsym"}) {
    const auto r = run_suite(name);
    CAPTURE(name);
    CHECK(r.passed());
    CHECK(to_json(r).at("passed") == true);
  }
}

TEST_CASE("command-line exit codes") {
  const auto good = temp_spec("s5.json", R"({"type":"sym","n":5})");
  const auto bad = temp_spec("bad.json", R"({"type":"sym","m":5})");
  const auto broken = temp_spec("broken.json", R"({"type":)");
  const auto big = temp_spec("s9.json", R"({"type":"sym","n":9})");
  CHECK(run("analyze " + good) == 0);
  CHECK(run("analyze " + good + " --table --witnesses") == 0);
  CHECK(run("analyze " + good + " --mode exhaustive") == 0);
  CHECK(run("analyze " + bad) == 2);
  CHECK(run("analyze " + broken) == 2);
  CHECK(run("analyze /nonexistent.json") == 2);
  CHECK(run("analyze " + good + " --mode sideways") == 2);
  CHECK(run("analyze " + big + " --budget 4") == 3);
  CHECK(run("verify gl42") == 0);
  CHECK(run("verify nope") == 2);
  CHECK(run("probe-epsilon " + good + " " + good) == 0);
  CHECK(run("") == 2);
}
