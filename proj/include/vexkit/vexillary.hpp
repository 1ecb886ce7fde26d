#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vexkit/signed_permutation.hpp"

namespace vexkit {

// A signed pattern is a short signed-permutation window.  w contains it when
// some subsequence of the window of w matches it sign-for-sign with
// magnitudes in the same relative order.
using SignedPattern = std::vector<int>;

// The nine minimal obstructions to being vexillary, in a fixed order.
const std::vector<SignedPattern>& nine_patterns();

// Positions (ascending) of an occurrence of `pattern` in `word` as a plain
// pattern (relative order only); the reported positions are the 1-based
// indices into `word`.
std::optional<std::vector<int>> find_pattern(const std::vector<int>& word,
                                             const std::vector<int>& pattern);

// Occurrence of a signed pattern in w; positions are 1-based window indices.
std::optional<std::vector<int>> find_signed_pattern(const SignedPermutation& w,
                                                    const SignedPattern& pattern);

// The five equivalent tests.  `all` runs every one and reports the shared
// verdict, throwing std::logic_error if they ever disagree (they cannot on
// correct code; the check guards the implementation).
enum class VexMode { triple, essential, odd, even, patterns, all };

VexMode parse_vex_mode(const std::string& name);  // throws on unknown name
std::string vex_mode_name(VexMode mode);

struct VexillaryReport {
  bool vexillary = false;
  VexMode mode = VexMode::patterns;
  // For the pattern-based modes, an offending pattern and where it sits.
  // For `odd`/`even` the positions are block positions of the embedding.
  std::optional<SignedPattern> witness_pattern;
  std::optional<std::vector<int>> witness_positions;
};

VexillaryReport is_vexillary(const SignedPermutation& w,
                             VexMode mode = VexMode::patterns);

std::uint64_t catalan(int k);
// sum over t of C(n,t)^2 * catalan(t); throws std::overflow_error when the
// value leaves 64 bits.
std::uint64_t vn_formula(int n);
// Exhaustive count of vexillary elements of rank n (rank-capped).
std::uint64_t count_vexillary(int n, int jobs = 1);
// Elements whose even block embedding avoids [4 3 2 1] (rank-capped).
std::uint64_t egge_count(int n, int jobs = 1);

}  // namespace vexkit
