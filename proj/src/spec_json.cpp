#include "basekit/spec_json.hpp"

#include <set>

#include "basekit/error.hpp"

namespace basekit {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void allow_keys(const json& j, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed{"type", "indecomposable"};
  for (const char* k : keys) allowed.insert(k);
  for (const auto& [key, value] : j.items())
    require(allowed.count(key) > 0, "unknown key \"" + key + "\" in " + j.at("type").dump());
}

std::uint64_t natural(const json& j, const char* key) {
  require(j.contains(key), "missing key \"" + std::string(key) + "\"");
  const json& v = j.at(key);
  require(v.is_number_integer() && v.get<std::int64_t>() >= 0,
          "\"" + std::string(key) + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<GroupSpec> factors(const json& j) {
  require(j.contains("factors") && j.at("factors").is_array(), "\"factors\" must be an array");
  std::vector<GroupSpec> out;
  for (const auto& f : j.at("factors")) out.push_back(parse_group_spec(f));
  require(!out.empty(), "\"factors\" must not be empty");
  return out;
}

GroupSpec parse_node(const json& j) {
  require(j.is_object(), "a group spec must be a JSON object");
  require(j.contains("type") && j.at("type").is_string(), "group spec needs a string \"type\"");
  const auto type = j.at("type").get<std::string>();
  if (type == "sym") {
    allow_keys(j, {"n"});
    return {spec::Sym{natural(j, "n")}};
  }
  if (type == "cyclic") {
    allow_keys(j, {"p"});
    return {spec::CyclicRegular{natural(j, "p")}};
  }
  if (type == "elem_abelian") {
    allow_keys(j, {"p", "d"});
    return {spec::ElemAbelianRegular{static_cast<std::uint32_t>(natural(j, "p")),
                                     static_cast<std::uint32_t>(natural(j, "d"))}};
  }
  if (type == "disjoint_product") {
    allow_keys(j, {"factors"});
    return {spec::DisjointProduct{factors(j)}};
  }
  if (type == "product_action") {
    allow_keys(j, {"factors"});
    return {spec::ProductAction{factors(j)}};
  }
  if (type == "theorem2") {
    allow_keys(j, {"X", "p"});
    require(j.contains("X") && j.at("X").is_array(), "\"X\" must be an array of integers");
    std::vector<int> sizes;
    for (const auto& x : j.at("X")) {
      require(x.is_number_integer(), "\"X\" must be an array of integers");
      sizes.push_back(x.get<int>());
    }
    const auto p = j.contains("p") ? static_cast<std::uint32_t>(natural(j, "p")) : 2u;
    return {spec::PrescribedSizes{sizes, p}};
  }
  if (type == "theorem3_m" || type == "theorem3_i") {
    allow_keys(j, {"a", "b"});
    return {spec::IntervalProduct{static_cast<int>(natural(j, "a")),
                                  static_cast<int>(natural(j, "b")),
                                  type == "theorem3_m" ? SizeKind::Minimal : SizeKind::Irredundant}};
  }
  if (type == "wreath_coset") {
    allow_keys(j, {"n", "k"});
    return {spec::WreathCoset{natural(j, "n"), natural(j, "k")}};
  }
  if (type == "k_subsets") {
    allow_keys(j, {"n", "k"});
    return {spec::KSubsets{natural(j, "n"), natural(j, "k")}};
  }
  if (type == "gl42_planes") {
    allow_keys(j, {});
    return {spec::GL42Planes{}};
  }
  if (type == "explicit") {
    allow_keys(j, {"degree", "generators"});
    const auto degree = natural(j, "degree");
    require(degree >= 1, "\"degree\" must be positive");
    require(j.contains("generators") && j.at("generators").is_array(),
            "\"generators\" must be an array of image lists");
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      require(g.is_array() && g.size() == degree, "each generator must list " +
                                                      std::to_string(degree) + " images");
      std::vector<Point> images;
      for (const auto& x : g) {
        require(x.is_number_integer() && x.get<std::int64_t>() >= 0, "images must be points");
        images.push_back(x.get<Point>());
      }
      gens.emplace_back(std::move(images));  // validates bijectivity
    }
    return {spec::Explicit{degree, std::move(gens)}};
  }
  throw DomainError("unknown group spec type \"" + type + "\"");
}

}  // namespace

GroupSpec parse_group_spec(const json& j) {
  GroupSpec spec = parse_node(j);
  if (j.contains("indecomposable"))
    require(j.at("indecomposable").is_boolean(), "\"indecomposable\" must be true or false");
  validate(spec);
  return spec;
}

std::optional<bool> indecomposable_tag(const json& j) {
  if (j.is_object() && j.contains("indecomposable") && j.at("indecomposable").is_boolean())
    return j.at("indecomposable").get<bool>();
  return std::nullopt;
}

json to_json(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        auto list = [](const std::vector<GroupSpec>& fs) {
          json out = json::array();
          for (const auto& f : fs) out.push_back(to_json(f));
          return out;
        };
        if constexpr (std::is_same_v<T, spec::Sym>) return {{"type", "sym"}, {"n", s.n}};
        else if constexpr (std::is_same_v<T, spec::CyclicRegular>)
          return {{"type", "cyclic"}, {"p", s.p}};
        else if constexpr (std::is_same_v<T, spec::ElemAbelianRegular>)
          return {{"type", "elem_abelian"}, {"p", s.p}, {"d", s.d}};
        else if constexpr (std::is_same_v<T, spec::DisjointProduct>)
          return {{"type", "disjoint_product"}, {"factors", list(s.factors)}};
        else if constexpr (std::is_same_v<T, spec::ProductAction>)
          return {{"type", "product_action"}, {"factors", list(s.factors)}};
        else if constexpr (std::is_same_v<T, spec::PrescribedSizes>)
          return {{"type", "theorem2"}, {"X", s.sizes}, {"p", s.p}};
        else if constexpr (std::is_same_v<T, spec::IntervalProduct>)
          return {{"type", s.kind == SizeKind::Minimal ? "theorem3_m" : "theorem3_i"},
                  {"a", s.a},
                  {"b", s.b}};
        else if constexpr (std::is_same_v<T, spec::WreathCoset>)
          return {{"type", "wreath_coset"}, {"n", s.n}, {"k", s.k}};
        else if constexpr (std::is_same_v<T, spec::KSubsets>)
          return {{"type", "k_subsets"}, {"n", s.n}, {"k", s.k}};
        else if constexpr (std::is_same_v<T, spec::GL42Planes>)
          return {{"type", "gl42_planes"}};
        else {
          json gens = json::array();
          for (const auto& g : s.generators)
            gens.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
          return {{"type", "explicit"}, {"degree", s.degree}, {"generators", gens}};
        }
      },
      spec.node);
}

}  // namespace basekit
