#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "vexkit/signed_permutation.hpp"

namespace vexkit {

// Strictly decreasing positive parts; the empty partition is allowed.
using StrictPartition = std::vector<int>;

bool is_strict_partition(const StrictPartition& lambda);
int partition_weight(const StrictPartition& lambda);
std::string partition_to_string(const StrictPartition& lambda);  // "5,4,2" or "()"

// Three rows of equal size s: k strictly increasing, p and q weakly
// decreasing, all entries positive, and every adjacent pair obeying the
// growth bound (*):  k[i+1] - k[i] <= (p[i] - p[i+1]) + (q[i] - q[i+1]).
// The triple is `essential` when every bound is strict.
class Triple {
 public:
  Triple() = default;  // empty triple

  // Validates; throws std::invalid_argument naming the violated constraint
  // ("(*) violated at i=1" for the growth bound, 1-based adjacent pairs).
  static Triple of(std::vector<int> k, std::vector<int> p, std::vector<int> q);

  int size() const { return static_cast<int>(k_.size()); }
  const std::vector<int>& k() const { return k_; }
  const std::vector<int>& p() const { return p_; }
  const std::vector<int>& q() const { return q_; }

  bool essential() const;
  std::string to_string() const;  // "k=1,3 p=2,2 q=3,1"

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  std::vector<int> k_, p_, q_;
};

// Repeatedly deletes the earlier row of the first adjacent pair that meets
// the growth bound with equality, until the triple is essential.  The
// associated permutation and shape are unchanged by this.
Triple triple_reduce(const Triple& t);

// Same reduced form, hence same associated permutation.
bool triple_equivalent(const Triple& a, const Triple& b);

// The signed permutation w(t): step i places the k[i]-k[i-1] smallest unused
// magnitudes >= q[i] as negative values, most negative first, into the
// vacant positions scanning right from p[i]; remaining positions get the
// unused positive values in increasing order.
SignedPermutation triple_to_perm(const Triple& t);

// The shape lambda(t): parts p[i]+q[i]-1+k[i]-t for k[i-1] < t <= k[i],
// sorted decreasingly.  Its weight equals length(triple_to_perm(t)).
StrictPartition triple_shape(const Triple& t);

// (k, q, p); satisfies triple_to_perm(dual) = triple_to_perm(t)^{-1}.
Triple triple_dual(const Triple& t);

// Reads the triple off the diagram of the odd block embedding of w: the SE
// corners must form a chain (pairwise comparable under row >=, col <=), the
// negative-column corners must sit in nonnegative rows, and the resulting
// essential triple must reproduce w.  Returns nullopt when any of that
// fails, i.e. exactly when w is not vexillary.
std::optional<Triple> try_perm_to_triple(const SignedPermutation& w);

// Throwing form of the above (std::invalid_argument when not vexillary).
Triple perm_to_triple(const SignedPermutation& w);

}  // namespace vexkit
