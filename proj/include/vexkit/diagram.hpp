#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "vexkit/signed_permutation.hpp"
#include "vexkit/window_permutation.hpp"

namespace vexkit {

// A cell of a diagram, addressed (row, column); rows grow downward.
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// A rank condition (k, p, q): "at least k of the values <= -q land in
// positions >= p" (see sp_rank), or the mirrored count for block
// permutations (see wp_rank).
struct RankCondition {
  int k;
  int p;
  int q;
  std::string to_string() const;  // "(k,p,q)"
  friend auto operator<=>(const RankCondition&, const RankCondition&) = default;
};

// ---- diagrams of block permutations ----

// Boxes (a, b) with v(b) > a and v^{-1}(a) > b, both coordinates ranging
// over the block.
std::set<Box> wp_diagram(const WindowPermutation& v);

// Boxes of the diagram with no neighbor directly south or east of them,
// equivalently the cells where v(b) > a >= v(b+1) and
// v^{-1}(a) > b >= v^{-1}(a+1).  Listed southwest to northeast (column
// ascending, row descending).
std::vector<Box> wp_se_corners(const WindowPermutation& v);

// r_v(p, q) = #{ i <= -p : v(i) >= q }.  Finite for every q because v fixes
// everything below the block.
int wp_rank(const WindowPermutation& v, int p, int q);

// { (r_v(-b, a+1), -b, a+1) : (a, b) a SE corner }.
std::set<RankCondition> wp_essential_set(const WindowPermutation& v);

// ---- diagrams of signed permutations ----

// The signed diagram lives on rows -n..n and columns -n..-1.  Dots mark
// (-w(i), -i); row w(i) carries crosses in columns -i..-1; `extended` keeps
// the cells not weakly south or east of a dot, and `boxes` additionally
// drops the crossed cells.  |boxes| equals length(w).
struct SignedDiagram {
  int n = 0;
  std::set<Box> dots;
  std::set<Box> crosses;
  std::set<Box> extended;
  std::set<Box> boxes;
};

// min_rank pads n beyond the canonical window, adding fully crossed-out
// rows/columns (useful for displaying untrimmed input).
SignedDiagram signed_diagram(const SignedPermutation& w, int min_rank = 0);

// #{ i >= p : w(i) <= -q }, with the fixed points beyond the window counted
// exactly (the count is finite for every q).
int sp_rank(const SignedPermutation& w, int p, int q);

// SE corners of the extended diagram (no extended cell directly south, and
// none directly east within the column range), southwest to northeast.
std::vector<Box> sp_extended_corners(const SignedPermutation& w, int min_rank = 0);

// Rank conditions (sp_rank(w,p,q), p, q) at the corners (q-1, -p) of the
// extended diagram, dropping the two redundant families: corners in the
// rightmost column with q < 0, and corners whose mirror cell (-q, -p) is
// also a corner and whose condition already follows from the mirror's
// (detected by sp_rank(w,p,q) == sp_rank(w,p,-q+1) - q + 1).
std::set<RankCondition> sp_essential_set(const SignedPermutation& w);

// Grid rendering with row/column labels.  Cells show a dot, a cross, a box
// of the diagram, or a dot-shadowed cell; corners contributing to the
// essential set carry their k value.  Deterministic, newline-terminated.
std::string render_signed_diagram(const SignedPermutation& w, int min_rank = 0);

}  // namespace vexkit
