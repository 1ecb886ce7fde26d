#pragma once

#include <string>
#include <vector>

#include "vexkit/triple.hpp"

namespace vexkit {

// Rows r (1-based) of a strict partition whose bottom-right box is exposed:
// the last row, plus every row at least 2 longer than the next.
std::vector<int> corner_rows(const StrictPartition& shape);

// A strict partition with one integer label per corner row.  Labels are
// weakly decreasing top to bottom, each in [0, length of its row), and an
// adjacent pair may differ by at most the difference of its row lengths.
// In bijection with essential triples: row set = k, labels = p - 1,
// row lengths at corners = p + q - 1.
class LabelledYoungDiagram {
 public:
  LabelledYoungDiagram() = default;  // empty diagram

  // Validates; throws std::invalid_argument naming the violated rule.
  static LabelledYoungDiagram of(StrictPartition shape, std::vector<int> labels);

  // The diagram of the longest element of rank n: shape (2n-1, 2n-3, .., 1)
  // with labels (n-1, n-2, .., 0).
  static LabelledYoungDiagram staircase(int n);

  bool empty() const { return shape_.empty(); }
  const StrictPartition& shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<int>& rows() const { return rows_; }  // corner rows

  friend bool operator==(const LabelledYoungDiagram&,
                         const LabelledYoungDiagram&) = default;

 private:
  StrictPartition shape_;
  std::vector<int> labels_;
  std::vector<int> rows_;
};

LabelledYoungDiagram lyd_from_triple(const Triple& t);
Triple lyd_to_triple(const LabelledYoungDiagram& y);

// Same shape, labels m -> (row length - m - 1); an involution matching
// permutation inversion.
LabelledYoungDiagram lyd_dual(const LabelledYoungDiagram& y);

// Smallest n such that the diagram's permutation lies in rank n.
int lyd_min_rank(const LabelledYoungDiagram& y);

// The diagram describing a vexillary w (throws std::invalid_argument for
// non-vexillary input).
LabelledYoungDiagram lyd_of(const SignedPermutation& w);

// Labels whose box can be deleted: m occurs once, and if m = 0 its row must
// be a single box.  Ascending.
std::vector<int> removable_labels(const LabelledYoungDiagram& y);

// Deletes the exposed box of the unique row labelled m.  A corner row that
// survives with one box fewer is relabelled m-1; a row newly exposed above
// it is labelled m+1; everything else keeps its label.
LabelledYoungDiagram remove_label(const LabelledYoungDiagram& y, int m);

// Labels that can be inserted (the inverse of removal).  Ascending.  Each
// insertable m belongs to exactly one gap between consecutive corner rows.
std::vector<int> insertable_labels(const LabelledYoungDiagram& y);

LabelledYoungDiagram insert_label(const LabelledYoungDiagram& y, int m);

// Which side a simple reflection multiplies on; `left` statements about a
// diagram Y are the `right` statements about its dual.
enum class Side { right, left };

// A chain of vexillary permutations from y's permutation up to the longest
// element of rank n, each step a single length-increasing simple reflection
// on the given side (greedy: insert the largest label < n each step).
std::vector<SignedPermutation> chain_to_longest(const LabelledYoungDiagram& y,
                                                int n, Side side);

// Shifted rendering: row r indented r-1 cells; the exposed box of each
// corner row shows its label.  Ends with a newline; "(empty)" for the
// empty diagram.
std::string render_lyd(const LabelledYoungDiagram& y);

}  // namespace vexkit
