#include "vexkit/json_io.hpp"

#include <stdexcept>

namespace vexkit {

namespace {

std::vector<int> int_list(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + " must be an array");
  }
  std::vector<int> out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument(std::string(what) +
                                  " must contain only integers");
    }
    out.push_back(item.get<int>());
  }
  return out;
}

const ordered_json& field(const ordered_json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

}  // namespace

ordered_json to_json(const SignedPermutation& w) {
  return ordered_json{{"window", w.window()}};
}

ordered_json to_json(const Triple& t) {
  return ordered_json{{"k", t.k()}, {"p", t.p()}, {"q", t.q()}};
}

ordered_json to_json(const LabelledYoungDiagram& y) {
  return ordered_json{{"shape", y.shape()}, {"labels", y.labels()}};
}

ordered_json to_json(const SchurPExpansion& h) {
  ordered_json out = ordered_json::array();
  for (const auto& [lambda, coeff] : h.terms()) {
    out.push_back(ordered_json{{"partition", lambda}, {"coeff", coeff}});
  }
  return out;
}

ordered_json to_json(const std::set<RankCondition>& conditions) {
  ordered_json out = ordered_json::array();
  for (const RankCondition& c : conditions) {
    out.push_back(ordered_json{{"k", c.k}, {"p", c.p}, {"q", c.q}});
  }
  return out;
}

SignedPermutation permutation_from_json(const ordered_json& j) {
  return SignedPermutation::from_oneline(int_list(field(j, "window"), "window"));
}

Triple triple_from_json(const ordered_json& j) {
  return Triple::of(int_list(field(j, "k"), "k"), int_list(field(j, "p"), "p"),
                    int_list(field(j, "q"), "q"));
}

LabelledYoungDiagram lyd_from_json(const ordered_json& j) {
  return LabelledYoungDiagram::of(int_list(field(j, "shape"), "shape"),
                                  int_list(field(j, "labels"), "labels"));
}

SchurPExpansion expansion_from_json(const ordered_json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("expansion must be an array of terms");
  }
  SchurPExpansion out;
  for (const auto& term : j) {
    const std::vector<int> lambda = int_list(field(term, "partition"), "partition");
    if (!is_strict_partition(lambda)) {
      throw std::invalid_argument("partition must be strict");
    }
    const ordered_json& coeff = field(term, "coeff");
    if (!coeff.is_number_integer()) {
      throw std::invalid_argument("coeff must be an integer");
    }
    out.add(lambda, coeff.get<long long>());
  }
  return out;
}

}  // namespace vexkit
