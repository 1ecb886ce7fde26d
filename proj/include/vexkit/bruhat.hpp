#pragma once

#include <vector>

#include "vexkit/signed_permutation.hpp"

namespace vexkit {

// All n^2 reflections acting on rank n: T(i,j) for 1 <= i < j <= n and
// S(i,j) for 1 <= i <= j <= n.
std::vector<Reflection> reflections(int n);

// The order generated by length-lowering reflection steps: u <= w iff u is
// reachable from w by such steps.  Computed from cached per-rank tables;
// supported up to rank 5 (the dense tables grow too fast beyond that).
bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w);

}  // namespace vexkit
