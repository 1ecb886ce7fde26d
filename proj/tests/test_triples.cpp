#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "vexkit/signed_permutation.hpp"
#include "vexkit/triple.hpp"

using namespace vexkit;

namespace {

// Every valid triple with at most `max_rows` rows and entries bounded by
// `max_entry`, by direct enumeration against the public validator.
std::vector<Triple> enumerate_valid_triples(int max_rows, int max_entry) {
  std::vector<Triple> out;
  std::vector<int> k, p, q;

  auto emit = [&] {
    try {
      out.push_back(Triple::of(k, p, q));
    } catch (const std::invalid_argument&) {
    }
  };

  auto rec = [&](auto&& self, int rows) -> void {
    if (rows > 0) emit();
    if (rows == max_rows) return;
    for (int kk = k.empty() ? 1 : k.back() + 1; kk <= max_entry; ++kk) {
      for (int pp = p.empty() ? max_entry : p.back(); pp >= 1; --pp) {
        for (int qq = q.empty() ? max_entry : q.back(); qq >= 1; --qq) {
          k.push_back(kk);
          p.push_back(pp);
          q.push_back(qq);
          self(self, rows + 1);
          k.pop_back();
          p.pop_back();
          q.pop_back();
        }
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Triple> essential_only(const std::vector<Triple>& triples) {
  std::vector<Triple> out;
  for (const auto& t : triples) {
    if (t.essential()) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("triple validation names the broken constraint") {
  CHECK_THROWS_WITH(Triple::of({1, 2}, {1}, {1, 1}),
                    "k, p, q must have equal lengths");
  CHECK_THROWS_WITH(Triple::of({0}, {1}, {1}), "entries must be positive");
  CHECK_THROWS_WITH(Triple::of({2, 2}, {2, 1}, {2, 1}),
                    "k must be strictly increasing");
  CHECK_THROWS_WITH(Triple::of({1, 2}, {1, 2}, {2, 1}),
                    "p must be weakly decreasing");
  CHECK_THROWS_WITH(Triple::of({1, 2}, {2, 1}, {1, 2}),
                    "q must be weakly decreasing");
  CHECK_THROWS_WITH(Triple::of({1, 2}, {1, 1}, {1, 1}),
                    "(*) violated at i=1");
  CHECK_THROWS_WITH(Triple::of({1, 2, 5}, {3, 2, 2}, {3, 2, 1}),
                    "(*) violated at i=2");

  // The growth bound holds with equality: valid but not essential.
  const Triple boundary = Triple::of({1, 2}, {1, 1}, {2, 1});
  CHECK(!boundary.essential());
  const Triple strict = Triple::of({2, 3}, {2, 2}, {3, 1});
  CHECK(strict.essential());
  CHECK(strict.to_string() == "k=2,3 p=2,2 q=3,1");
  CHECK(Triple::of({}, {}, {}).to_string() == "k=- p=- q=-");
}

TEST_CASE("reduction removes slack rows and fixes essential triples") {
  const Triple slack = Triple::of({1, 2}, {1, 1}, {2, 1});
  const Triple reduced = triple_reduce(slack);
  CHECK(reduced == Triple::of({2}, {1}, {1}));
  CHECK(reduced.essential());
  CHECK(triple_reduce(reduced) == reduced);
  CHECK(triple_equivalent(slack, reduced));
  CHECK(!triple_equivalent(slack, Triple::of({1}, {1}, {1})));

  // Reduction never changes the described permutation or its shape.
  for (const auto& t : enumerate_valid_triples(3, 4)) {
    CAPTURE(t.to_string());
    const Triple r = triple_reduce(t);
    CHECK(r.essential());
    CHECK(triple_to_perm(r) == triple_to_perm(t));
    CHECK(triple_shape(r) == triple_shape(t));
  }
}

TEST_CASE("construction reproduces frozen windows") {
  CHECK(triple_to_perm(Triple::of({1}, {1}, {1})) ==
        SignedPermutation::from_oneline({-1}));
  CHECK(triple_to_perm(Triple::of({2}, {1}, {1})) ==
        SignedPermutation::from_oneline({-2, -1}));
  CHECK(triple_to_perm(Triple::of({2, 3}, {2, 2}, {3, 1})) ==
        SignedPermutation::from_oneline({2, -4, -3, -1}));
  CHECK(triple_to_perm(Triple::of({1, 3, 4, 5, 8}, {9, 9, 6, 4, 3},
                                  {12, 9, 8, 8, 5})) ==
        SignedPermutation::from_oneline(
            {1, 2, -7, -11, -6, -8, -5, 3, -12, -10, -9, 4}));
  CHECK(triple_to_perm(Triple::of({}, {}, {})).is_identity());
}

TEST_CASE("shape, length, and descents follow the rows") {
  const auto essentials = essential_only(enumerate_valid_triples(3, 5));
  CHECK(essentials.size() == 3231);
  for (const auto& t : essentials) {
    CAPTURE(t.to_string());
    const SignedPermutation w = triple_to_perm(t);
    const StrictPartition shape = triple_shape(t);
    CHECK(is_strict_partition(shape));
    CHECK(w.length() == partition_weight(shape));

    std::set<int> expected_descents;
    for (int pi : t.p()) expected_descents.insert(pi - 1);
    const auto d = w.descents();
    CHECK(std::set<int>(d.begin(), d.end()) == expected_descents);
  }
}

TEST_CASE("the dual triple describes the inverse permutation") {
  for (const auto& t : essential_only(enumerate_valid_triples(2, 5))) {
    CAPTURE(t.to_string());
    const Triple dual = triple_dual(t);
    CHECK(dual.k() == t.k());
    CHECK(dual.p() == t.q());
    CHECK(dual.q() == t.p());
    CHECK(triple_to_perm(dual) == triple_to_perm(t).inverse());
    CHECK(triple_dual(dual) == t);
  }
}

TEST_CASE("extraction inverts construction on essential triples") {
  for (const auto& t : essential_only(enumerate_valid_triples(2, 4))) {
    CAPTURE(t.to_string());
    const SignedPermutation w = triple_to_perm(t);
    const auto back = try_perm_to_triple(w);
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
}

TEST_CASE("extraction fails exactly on inputs without a describing triple") {
  CHECK(!try_perm_to_triple(SignedPermutation::from_oneline({2, 1})));
  CHECK_THROWS_WITH(perm_to_triple(SignedPermutation::from_oneline({2, 1})),
                    "not vexillary: 2,1 has no describing triple");

  // Spot checks at rank 3: extraction succeeds precisely when the
  // permutation avoids the forbidden patterns (cross-checked exhaustively
  // in the vexillary tests; here a frozen sample).
  CHECK(try_perm_to_triple(SignedPermutation::from_oneline({-3, 2, -1})) ==
        std::nullopt);
  CHECK(try_perm_to_triple(SignedPermutation::from_oneline({3, -2, 1})) ==
        std::nullopt);
  const auto t = try_perm_to_triple(SignedPermutation::from_oneline({-2, -1}));
  REQUIRE(t.has_value());
  CHECK(*t == Triple::of({2}, {1}, {1}));

  const auto identity_triple = try_perm_to_triple(SignedPermutation::identity());
  REQUIRE(identity_triple.has_value());
  CHECK(identity_triple->size() == 0);
}

TEST_CASE("strict partition helpers") {
  CHECK(is_strict_partition({5, 4, 2}));
  CHECK(is_strict_partition({}));
  CHECK(!is_strict_partition({4, 4}));
  CHECK(!is_strict_partition({4, 5}));
  CHECK(!is_strict_partition({3, 0}));
  CHECK(partition_weight({5, 4, 2}) == 11);
  CHECK(partition_weight({}) == 0);
  CHECK(partition_to_string({5, 4, 2}) == "5,4,2");
  CHECK(partition_to_string({}) == "()");
}
