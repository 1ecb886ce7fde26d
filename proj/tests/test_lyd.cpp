#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vexkit/lyd.hpp"
#include "vexkit/signed_permutation.hpp"
#include "vexkit/triple.hpp"

using namespace vexkit;

namespace {

// Every valid labelled diagram whose shape weighs at most `max_weight`,
// enumerated from scratch (shapes by recursive descent, labels by testing
// the public validator on every candidate row assignment).
std::vector<LabelledYoungDiagram> enumerate_lyds(int max_weight) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> shape;
  auto shapes_rec = [&](auto&& self, int largest, int budget) -> void {
    shapes.push_back(shape);
    for (int next = std::min(largest, budget); next >= 1; --next) {
      shape.push_back(next);
      self(self, next - 1, budget - next);
      shape.pop_back();
    }
  };
  shapes_rec(shapes_rec, max_weight, max_weight);

  std::vector<LabelledYoungDiagram> out;
  for (const auto& s : shapes) {
    const auto rows = corner_rows(s);
    std::vector<int> labels(rows.size(), 0);
    auto labels_rec = [&](auto&& self, std::size_t i) -> void {
      if (i == rows.size()) {
        try {
          out.push_back(LabelledYoungDiagram::of(s, labels));
        } catch (const std::invalid_argument&) {
        }
        return;
      }
      for (int m = 0; m < s[rows[i] - 1]; ++m) {
        labels[i] = m;
        self(self, i + 1);
      }
    };
    labels_rec(labels_rec, 0);
  }
  return out;
}

std::vector<std::string> windows_of(const std::vector<SignedPermutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST_CASE("labelled diagram validation names the broken rule") {
  CHECK_THROWS_WITH(LabelledYoungDiagram::of({4, 4}, {0, 0}),
                    "shape must be a strict partition");
  CHECK_THROWS_WITH(LabelledYoungDiagram::of({5, 4, 2}, {1}),
                    "need exactly one label per corner row (2 here)");
  CHECK_THROWS_WITH(LabelledYoungDiagram::of({5, 4, 2}, {0, 1}),
                    "labels must be weakly decreasing");
  CHECK_THROWS_WITH(LabelledYoungDiagram::of({5, 4, 2}, {4, 1}),
                    "label 4 out of range for row 2");
  CHECK_THROWS_WITH(LabelledYoungDiagram::of({5, 3, 2}, {4, 0}),
                    "label drop exceeds row-length drop between rows 1 and 3");
  CHECK(LabelledYoungDiagram::of({}, {}).empty());
}

TEST_CASE("corner rows are the rows that end a column block") {
  CHECK(corner_rows({5, 4, 2}) == std::vector<int>{2, 3});
  CHECK(corner_rows({5, 3, 1}) == std::vector<int>{1, 2, 3});
  CHECK(corner_rows({3, 2, 1}) == std::vector<int>{3});
  CHECK(corner_rows({1}) == std::vector<int>{1});
  CHECK(corner_rows({}).empty());
}

TEST_CASE("the staircase is the diagram of the longest element") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto stair = LabelledYoungDiagram::staircase(n);
    std::vector<int> expected_shape, expected_labels;
    for (int i = 0; i < n; ++i) {
      expected_shape.push_back(2 * (n - i) - 1);
      expected_labels.push_back(n - 1 - i);
    }
    CHECK(stair.shape() == expected_shape);
    CHECK(stair.labels() == expected_labels);
    CHECK(lyd_min_rank(stair) == n);
    CHECK(lyd_of(SignedPermutation::longest(n)) == stair);
    CHECK(lyd_dual(stair) == stair);  // the longest element is an involution
  }
}

TEST_CASE("diagrams and essential triples are in bijection") {
  const Triple sample = Triple::of({2, 3}, {2, 2}, {3, 1});
  const auto y = lyd_from_triple(sample);
  CHECK(y.shape() == std::vector<int>{5, 4, 2});
  CHECK(y.labels() == std::vector<int>{1, 1});
  CHECK(y.rows() == std::vector<int>{2, 3});
  CHECK(lyd_to_triple(y) == sample);

  CHECK_THROWS_WITH(lyd_from_triple(Triple::of({1, 2}, {1, 1}, {2, 1})),
                    "triple must be essential (reduce it first)");

  const auto diagrams = enumerate_lyds(8);
  CHECK(diagrams.size() == 114);
  for (const auto& d : diagrams) {
    const Triple t = lyd_to_triple(d);
    CHECK(t.essential());
    CHECK(lyd_from_triple(t) == d);
    CHECK(partition_weight(d.shape()) == partition_weight(triple_shape(t)));
  }
}

TEST_CASE("duality is an involution matching permutation inversion") {
  const auto y = LabelledYoungDiagram::of({5, 4, 2}, {1, 1});
  const auto dual = lyd_dual(y);
  CHECK(dual.shape() == std::vector<int>{5, 4, 2});
  CHECK(dual.labels() == std::vector<int>{2, 0});

  for (const auto& d : enumerate_lyds(8)) {
    CAPTURE(partition_to_string(d.shape()));
    CHECK(lyd_dual(lyd_dual(d)) == d);
    const SignedPermutation w = triple_to_perm(lyd_to_triple(d));
    const SignedPermutation via_dual = triple_to_perm(lyd_to_triple(lyd_dual(d)));
    CHECK(via_dual == w.inverse());
    CHECK(lyd_min_rank(d) == w.size());
    CHECK(lyd_min_rank(lyd_dual(d)) == lyd_min_rank(d));
  }
}

TEST_CASE("removable and insertable label sets are frozen") {
  const auto wide = LabelledYoungDiagram::of({5, 4, 2}, {1, 1});
  CHECK(removable_labels(wide).empty());
  CHECK(insertable_labels(wide) == std::vector<int>{0, 2, 3});

  const auto dual = LabelledYoungDiagram::of({5, 4, 2}, {2, 0});
  CHECK(removable_labels(dual) == std::vector<int>{2});
  CHECK(insertable_labels(dual) == std::vector<int>{1, 3, 4});

  CHECK(removable_labels(LabelledYoungDiagram::of({3, 1}, {2, 0})) ==
        std::vector<int>{0, 2});
  CHECK(insertable_labels(LabelledYoungDiagram::of({3, 1}, {2, 0})) ==
        std::vector<int>{1, 3});

  CHECK(removable_labels(LabelledYoungDiagram::of({1}, {0})) ==
        std::vector<int>{0});
  CHECK(insertable_labels(LabelledYoungDiagram::of({1}, {0})) ==
        std::vector<int>{1});

  CHECK(removable_labels(LabelledYoungDiagram()).empty());
  CHECK(insertable_labels(LabelledYoungDiagram()) == std::vector<int>{0});
}

TEST_CASE("removal and insertion are mutually inverse") {
  int removals = 0, insertions = 0;
  for (const auto& d : enumerate_lyds(8)) {
    CAPTURE(partition_to_string(d.shape()));
    for (int m : removable_labels(d)) {
      CAPTURE(m);
      const auto smaller = remove_label(d, m);
      CHECK(partition_weight(smaller.shape()) ==
            partition_weight(d.shape()) - 1);
      CHECK(insert_label(smaller, m) == d);
      ++removals;
    }
    for (int m : insertable_labels(d)) {
      CAPTURE(m);
      const auto larger = insert_label(d, m);
      CHECK(partition_weight(larger.shape()) ==
            partition_weight(d.shape()) + 1);
      CHECK(remove_label(larger, m) == d);
      ++insertions;
    }
  }
  // The walk visited a meaningful portion of the poset.
  CHECK(removals > 100);
  CHECK(insertions > 200);

  CHECK_THROWS_WITH(remove_label(LabelledYoungDiagram::of({1}, {0}), 5),
                    "label 5 is not removable here");
  CHECK_THROWS_WITH(insert_label(LabelledYoungDiagram::of({1}, {0}), 0),
                    "label 0 is not insertable here");
}

TEST_CASE("growth chains reach the top element on both sides") {
  SUBCASE("frozen right chain from the empty diagram at rank 2") {
    const auto chain =
        chain_to_longest(LabelledYoungDiagram(), 2, Side::right);
    CHECK(windows_of(chain) ==
          std::vector<std::string>{"()", "-1", "2,-1", "-2,-1", "-1,-2"});
  }

  SUBCASE("frozen right chain from the running example at rank 4") {
    const auto start = LabelledYoungDiagram::of({5, 4, 2}, {1, 1});
    const auto chain = chain_to_longest(start, 4, Side::right);
    CHECK(windows_of(chain) ==
          std::vector<std::string>{"2,-4,-3,-1", "2,-4,-1,-3", "2,-1,-4,-3",
                                   "2,-1,-3,-4", "-2,-1,-3,-4",
                                   "-1,-2,-3,-4"});
  }

  SUBCASE("each step multiplies by one simple reflection on the stated side") {
    for (const auto& d : enumerate_lyds(5)) {
      const int n = std::max(lyd_min_rank(d), 2);
      for (Side side : {Side::right, Side::left}) {
        const auto chain = chain_to_longest(d, n, side);
        REQUIRE(!chain.empty());
        CHECK(chain.back() == SignedPermutation::longest(n));
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          CHECK(chain[i + 1].length() == chain[i].length() + 1);
          bool one_simple_step = false;
          for (int m = 0; m < n; ++m) {
            const auto moved = side == Side::right
                                   ? chain[i].times_simple(m)
                                   : chain[i].simple_times(m);
            if (moved == chain[i + 1]) one_simple_step = true;
          }
          CHECK(one_simple_step);
        }
      }
    }
  }

  SUBCASE("a rank below the minimum is rejected") {
    CHECK_THROWS_WITH(
        chain_to_longest(LabelledYoungDiagram::of({5, 4, 2}, {1, 1}), 3,
                         Side::right),
        "rank 3 is below the diagram's minimum rank 4");
  }
}

TEST_CASE("diagram rendering matches the stored removal episodes") {
  std::ostringstream reconstructed;
  auto ints = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
  };
  auto episode = [&](const std::vector<int>& shape,
                     const std::vector<int>& labels, int m) {
    const auto y = LabelledYoungDiagram::of(shape, labels);
    reconstructed << "diagram (" << ints(shape) << ")/(" << ints(labels)
                  << ")\n";
    reconstructed << "removable: " << ints(removable_labels(y)) << "\n";
    reconstructed << "remove " << m << ":\n";
    reconstructed << render_lyd(remove_label(y, m));
    reconstructed << "\n";
  };
  episode({5, 3, 1}, {3, 2, 0}, 2);
  episode({5, 2, 1}, {3, 0}, 3);
  episode({5, 2, 1}, {3, 0}, 0);
  episode({3, 2}, {1}, 1);

  std::ifstream golden(std::string(VEXKIT_TEST_DIR) + "/golden/removals.txt",
                       std::ios::binary);
  REQUIRE(golden.good());
  std::stringstream stored;
  stored << golden.rdbuf();
  CHECK(reconstructed.str() == stored.str());
}

TEST_CASE("rendering is stable and shows labels in corner boxes") {
  CHECK(render_lyd(LabelledYoungDiagram()) == "(empty)\n");
  const auto y = LabelledYoungDiagram::of({3, 1}, {1, 0});
  const std::string text = render_lyd(y);
  CHECK(text == render_lyd(y));
  CHECK(text == "shape: 3,1\nlabels: 1,0\n□  □  1\n   0\n");
}
