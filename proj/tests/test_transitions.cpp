#include <doctest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vexkit/common.hpp"
#include "vexkit/lyd.hpp"
#include "vexkit/signed_permutation.hpp"
#include "vexkit/transitions.hpp"
#include "vexkit/triple.hpp"
#include "vexkit/vexillary.hpp"

using namespace vexkit;

namespace {

std::vector<SignedPermutation> all_of_rank(int n) {
  GroupEnumeration group(n);
  std::vector<SignedPermutation> out;
  out.reserve(group.size());
  for (std::uint64_t i = 0; i < group.size(); ++i) out.push_back(group.at(i));
  return out;
}

std::vector<StrictPartition> strict_partitions_up_to(int max_weight) {
  std::vector<StrictPartition> out;
  StrictPartition shape;
  auto rec = [&](auto&& self, int largest, int budget) -> void {
    out.push_back(shape);
    for (int next = std::min(largest, budget); next >= 1; --next) {
      shape.push_back(next);
      self(self, next - 1, budget - next);
      shape.pop_back();
    }
  };
  rec(rec, max_weight, max_weight);
  return out;
}

SignedPermutation parse(const std::string& text) {
  return parse_signed_permutation(text);
}

std::vector<std::string> windows_of(const std::vector<SignedPermutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

bool equal_sets(const TransitionSet& a, const TransitionSet& b) {
  return a.m == b.m && a.j == b.j && a.targets == b.targets &&
         a.doubled == b.doubled;
}

}  // namespace

TEST_CASE("one-descent windows encode strict partitions") {
  CHECK(max_grassmannian({4, 2, 1}) == parse("-4,-2,-1,3"));
  CHECK(max_grassmannian({1}) == parse("-1"));
  CHECK(max_grassmannian({}).is_identity());
  CHECK_THROWS_WITH(max_grassmannian({2, 2}),
                    "shape must be a strict partition");

  for (const auto& shape : strict_partitions_up_to(8)) {
    CAPTURE(partition_to_string(shape));
    const auto w = max_grassmannian(shape);
    CHECK(is_max_grassmannian(w));
    CHECK(mg_shape(w) == shape);
    CHECK(w.length() == partition_weight(shape));
  }

  // The predicate matches the descent criterion on every rank-3 element.
  for (const auto& w : all_of_rank(3)) {
    const auto d = w.descents();
    const bool at_most_zero = d.empty() || (d.size() == 1 && d[0] == 0);
    CHECK(is_max_grassmannian(w) == at_most_zero);
  }
  CHECK_THROWS_WITH(mg_shape(parse("2,1")),
                    "2,1 has a descent at a positive position");
}

TEST_CASE("transition sets are frozen for known windows") {
  SUBCASE("a doubled move") {
    const auto set = transitions(parse("2,1"));
    CHECK(set.m == 1);
    CHECK(set.j == 2);
    CHECK(set.targets.empty());
    REQUIRE(set.doubled.has_value());
    CHECK(*set.doubled == parse("-1"));
  }

  SUBCASE("a unique ordinary move") {
    const auto set = transitions(parse("2,-4,-3,-1"));
    CHECK(set.targets == std::vector<SignedPermutation>{parse("-2,-4,-3,1")});
    CHECK(!set.doubled.has_value());
  }

  SUBCASE("branching moves") {
    const auto wide = transitions(parse("3,-4,-1,-2"));
    CHECK(windows_of(wide.targets) ==
          std::vector<std::string>{"3,-2,-4,-1", "2,-4,-3,-1"});
    CHECK(!wide.doubled.has_value());

    const auto shrink = transitions(parse("-1,3,2"));
    CHECK(windows_of(shrink.targets) ==
          std::vector<std::string>{"2,-1", "-2,1"});

    const auto mixed = transitions(parse("-2,-3,4,-1"));
    CHECK(windows_of(mixed.targets) ==
          std::vector<std::string>{"-1,-3,-2", "-2,-1,-3"});
  }

  SUBCASE("inputs without a positive descent are rejected") {
    CHECK_THROWS_WITH(transitions(SignedPermutation::identity()),
                      "() has no descent at a positive position");
    CHECK_THROWS_WITH(transitions(parse("-3,-1,2")),
                      "-3,-1,2 has no descent at a positive position");
  }
}

TEST_CASE("transition moves preserve length and ignore window padding") {
  for (const auto& w : all_of_rank(3)) {
    if (w.last_descent() < 1) continue;
    CAPTURE(w.to_string());
    const auto set = transitions(w);
    CHECK(!(set.targets.empty() && !set.doubled.has_value()));
    for (const auto& target : set.targets) {
      CHECK(target.length() == w.length());
    }
    if (set.doubled) CHECK(set.doubled->length() == w.length());
    CHECK(equal_sets(set, transitions(w, 5)));
  }
}

TEST_CASE("exactly one move exists precisely for vexillary pivots") {
  CHECK(unique_transition(parse("2,-4,-3,-1")) == parse("-2,-4,-3,1"));
  CHECK(unique_transition(parse("2,1")) == parse("-1"));
  CHECK_THROWS_WITH(unique_transition(parse("3,-4,-1,-2")),
                    "expected exactly one transition for 3,-4,-1,-2, found 2");

  // One direction is a theorem: vexillary pivots branch exactly once.  The
  // converse is false (plenty of non-vexillary pivots also have one move),
  // so only the forward claim is asserted.
  for (const auto& w : all_of_rank(4)) {
    if (w.last_descent() < 1) continue;
    if (!is_vexillary(w, VexMode::patterns).vexillary) continue;
    CAPTURE(w.to_string());
    const auto set = transitions(w);
    CHECK(set.targets.size() + (set.doubled ? 1 : 0) == 1);
  }
}

TEST_CASE("expansions are frozen for known windows") {
  auto text_of = [](const char* window) {
    return stanley_h(parse(window)).to_string();
  };
  CHECK(text_of("") == "P[]: 1\n");
  CHECK(text_of("-4,-2,-1,3") == "P[4,2,1]: 1\n");
  CHECK(text_of("2,1") == "P[1]: 2\n");
  CHECK(text_of("-1,-2") == "P[3,1]: 1\n");
  CHECK(text_of("-1,-2,-3") == "P[5,3,1]: 1\n");
  CHECK(text_of("2,1,-3") == "P[5,1]: 2\n");
  CHECK(text_of("3,-4,-1,-2") == "P[6,3,2]: 1\nP[5,4,2]: 1\n");
  CHECK(text_of("-2,-3,4,-1") == "P[5,2,1]: 1\nP[4,3,1]: 1\n");
}

TEST_CASE("vexillary expansions collapse to their shape") {
  for (const auto& w : all_of_rank(3)) {
    if (!is_vexillary(w, VexMode::patterns).vexillary) continue;
    CAPTURE(w.to_string());
    const auto expansion = stanley_h(w);
    REQUIRE(expansion.terms().size() == 1);
    const auto& [shape, coeff] = *expansion.terms().begin();
    CHECK(coeff == 1);
    CHECK(shape == triple_shape(perm_to_triple(w)));
  }
}

TEST_CASE("every coefficient at rank 3 is a positive integer") {
  for (const auto& w : all_of_rank(3)) {
    CAPTURE(w.to_string());
    const auto expansion = stanley_h(w);
    CHECK(!expansion.terms().empty());
    for (const auto& [shape, coeff] : expansion.terms()) {
      CHECK(is_strict_partition(shape));
      CHECK(coeff > 0);
    }
  }
}

TEST_CASE("the node budget cuts off runaway recursions") {
  StanleyOptions tight;
  tight.budget = 2;
  CHECK_THROWS_AS(stanley_h(SignedPermutation::longest(4), tight),
                  BudgetExceededError);
  StanleyOptions enough;
  enough.budget = 1'000'000;
  CHECK(stanley_h(SignedPermutation::longest(4), enough).to_string() ==
        "P[7,5,3,1]: 1\n");
}

TEST_CASE("expansion arithmetic merges, cancels, and orders") {
  SchurPExpansion e = SchurPExpansion::single({3, 1}, 2);
  e.add({4}, 1);
  e.add({3, 1}, -2);  // cancels the first term entirely
  CHECK(e.to_string() == "P[4]: 1\n");

  SchurPExpansion sum = SchurPExpansion::single({2}, 1);
  sum.add_scaled(SchurPExpansion::single({1}, 3), 2);
  sum.add({}, 1);
  CHECK(sum.to_string() == "P[2]: 1\nP[1]: 6\nP[]: 1\n");

  SchurPExpansion zero;
  CHECK(zero.to_string() == "0\n");
  zero.add({1}, 1);
  zero.add({1}, -1);
  CHECK(zero.to_string() == "0\n");
  CHECK(zero == SchurPExpansion());
}
