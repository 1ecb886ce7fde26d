#pragma once

#include <set>

#include <json.hpp>

#include "vexkit/diagram.hpp"
#include "vexkit/lyd.hpp"
#include "vexkit/signed_permutation.hpp"
#include "vexkit/transitions.hpp"
#include "vexkit/triple.hpp"

namespace vexkit {

// Stable wire schemas (field order preserved):
//   permutation   {"window":[..]}
//   triple        {"k":[..],"p":[..],"q":[..]}
//   diagram       {"shape":[..],"labels":[..]}
//   expansion     [{"partition":[..],"coeff":n}, ..]  (descending lex)
//   rank set      [{"k":n,"p":n,"q":n}, ..]
using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const SignedPermutation& w);
ordered_json to_json(const Triple& t);
ordered_json to_json(const LabelledYoungDiagram& y);
ordered_json to_json(const SchurPExpansion& h);
ordered_json to_json(const std::set<RankCondition>& conditions);

// Each parser throws std::invalid_argument on schema or value errors.
SignedPermutation permutation_from_json(const ordered_json& j);
Triple triple_from_json(const ordered_json& j);
LabelledYoungDiagram lyd_from_json(const ordered_json& j);
SchurPExpansion expansion_from_json(const ordered_json& j);

}  // namespace vexkit
