#pragma once

#include <vector>

#include "vexkit/signed_permutation.hpp"

namespace vexkit {

// Which positions a block permutation uses: `odd` acts on -N..N with 0 a
// fixed point of every embedded element; `even` acts on the same block with
// 0 removed.
enum class Parity { odd, even };

// A signed permutation viewed as an honest permutation of a symmetric block
// of integers.  Since w(-i) = -w(i) and w(0) = 0, the values on -N..N are a
// permutation of that block whenever N covers the support of w.  Positions
// outside the block are fixed points.
class WindowPermutation {
 public:
  // radius < 0 means "use the canonical window size of w".  A larger radius
  // pads the block with fixed points; radius below the support is rejected.
  WindowPermutation(const SignedPermutation& w, Parity parity, int radius = -1);

  Parity parity() const { return parity_; }
  int radius() const { return radius_; }

  // Positions of the block in ascending order.
  const std::vector<int>& positions() const { return positions_; }

  // Values read left to right across the block.
  std::vector<int> word() const;

  // Value at any position; identity outside the block.
  int operator()(int pos) const;

  // Position holding `value`; identity outside the block.
  int inverse_at(int value) const;

 private:
  Parity parity_;
  int radius_;
  std::vector<int> positions_;
  std::vector<int> values_;   // parallel to positions_
  std::vector<int> inverse_;  // indexed by value + radius
};

}  // namespace vexkit
