#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vexkit/signed_permutation.hpp"
#include "vexkit/triple.hpp"

namespace vexkit {

// The element whose only descent is at 0 and whose negated values read
// lambda: one-line word (-lambda_1, .., -lambda_s, then the unused positive
// values in increasing order).
SignedPermutation max_grassmannian(const StrictPartition& lambda);

// True when the descent set is empty or {0}.
bool is_max_grassmannian(const SignedPermutation& w);

// Inverse of max_grassmannian; throws std::invalid_argument when w has a
// descent at a positive position.
StrictPartition mg_shape(const SignedPermutation& w);

// The length-preserving moves rooted at the last descent m: with j the
// largest position past m holding a smaller value and v = w T(m,j) (one
// step shorter, asserted), the set keeps every candidate v T(i,m) (i < m),
// v S(i,m) (i < m), and v S(m,i) (i > m, searched through n+1) whose length
// is back to length(w).  The sign-flip candidate v S(m,m) is reported
// separately because it counts twice downstream.
struct TransitionSet {
  std::vector<SignedPermutation> targets;
  std::optional<SignedPermutation> doubled;
  int m = 0;
  int j = 0;
};

// `extra` widens the S(m, i) search through n+extra (the default suffices;
// widening is exposed so sweeps can confirm that).
TransitionSet transitions(const SignedPermutation& w, int extra = 1);

// For vexillary w that is neither the identity nor maximal grassmannian:
// the only transition (the doubled candidate included in the count).
// Throws std::invalid_argument on bad input and std::logic_error if the
// count differs from one.
SignedPermutation unique_transition(const SignedPermutation& w);

// Descending lexicographic order on strict partitions.
struct PartitionDescLex {
  bool operator()(const StrictPartition& a, const StrictPartition& b) const;
};

// A finite integer combination of P-basis symbols indexed by strict
// partitions, printed one "P[5,4,2]: coeff" line per term.
class SchurPExpansion {
 public:
  using Map = std::map<StrictPartition, long long, PartitionDescLex>;

  SchurPExpansion() = default;
  static SchurPExpansion single(StrictPartition lambda, long long coeff = 1);

  void add(const StrictPartition& lambda, long long coeff);  // drops zeros
  void add_scaled(const SchurPExpansion& other, long long factor);
  const Map& terms() const { return terms_; }
  std::string to_string() const;

  friend bool operator==(const SchurPExpansion&, const SchurPExpansion&) = default;

 private:
  Map terms_;
};

struct StanleyOptions {
  // Expanded-node budget; exceeding it raises BudgetExceededError.
  long long budget = 1'000'000;
};

// The P-expansion of the symmetric function attached to w, computed by the
// transition recursion: identity -> P of the empty partition, maximal
// grassmannian -> P of its shape, otherwise twice the doubled candidate's
// expansion plus the sum over targets.  Memoized per call.
SchurPExpansion stanley_h(const SignedPermutation& w,
                          const StanleyOptions& options = {});

}  // namespace vexkit
