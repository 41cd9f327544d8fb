#pragma once

// JSON form of construction expressions. Schema (version 1):
//
//   {"type":"sym","n":5}
//   {"type":"cyclic","p":3}
//   {"type":"elem_abelian","p":2,"d":3}
//   {"type":"disjoint_product","factors":[<spec>, ...]}
//   {"type":"product_action","factors":[<spec>, ...]}
//   {"type":"theorem2","X":[1,3,5,7],"p":2}        p optional, default 2
//   {"type":"theorem3_m","a":2,"b":4}  {"type":"theorem3_i","a":2,"b":4}
//   {"type":"wreath_coset","n":4,"k":3}
//   {"type":"k_subsets","n":6,"k":2}
//   {"type":"gl42_planes"}
//   {"type":"explicit","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]}
//
// Any spec may carry "indecomposable": true|false, a manual tag read by
// the epsilon probe. Unknown keys are rejected.

#include <optional>

#include "json.hpp"

#include "basekit/constructions.hpp"

namespace basekit {

inline constexpr int kGroupSpecSchemaVersion = 1;

/// Throws DomainError on malformed input.
GroupSpec parse_group_spec(const nlohmann::json& j);

nlohmann::json to_json(const GroupSpec& spec);

/// The optional "indecomposable" tag of a spec document.
std::optional<bool> indecomposable_tag(const nlohmann::json& j);

}  // namespace basekit
