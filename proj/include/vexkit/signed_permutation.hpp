#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vexkit {

// A reflection in the signed permutation group: either a transposition
// T(i,j) (swap positions i and j, 1 <= i < j) or a sign-crossing reflection
// S(i,j) (exchange positions i and j with a sign flip, 1 <= i <= j; S(m,m)
// negates the entry at position m).
struct Reflection {
  enum class Kind { transposition, sign_cross };
  Kind kind;
  int i;
  int j;

  static Reflection T(int i, int j);
  static Reflection S(int i, int j);
  std::string to_string() const;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

// A signed permutation w of {..,-2,-1,1,2,..} with finite support, i.e.
// w(-i) = -w(i) and w(m) = m for all |m| beyond the window.  Stored as the
// one-line window (w(1),..,w(n)) with trailing fixed points trimmed, so two
// equal group elements always compare equal regardless of the window they
// were built from.
class SignedPermutation {
 public:
  SignedPermutation() = default;  // identity

  // Builds from a one-line window.  The entries must be +-1,..,+-n, each
  // absolute value exactly once; otherwise throws std::invalid_argument.
  static SignedPermutation from_oneline(std::vector<int> window);

  static SignedPermutation identity() { return {}; }

  // The longest element of rank n: (-1,-2,..,-n), of length n^2.
  static SignedPermutation longest(int n);

  // Canonical window size (trailing fixed points removed).
  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  bool is_identity() const { return window_.empty(); }

  // Evaluates w at any integer (0 maps to 0, identity beyond the window).
  int operator()(int m) const;

  // Position i with w(i) = value, for any nonzero value.
  int position_of(int value) const;

  // Number of inversions plus number of index pairs i <= j with
  // w(i) + w(j) < 0; equals the minimal length of a word in s_0,..,s_{n-1}.
  int length() const;

  // All i >= 0 with w(i) > w(i+1); a descent at 0 means w(1) < 0.
  std::vector<int> descents() const;
  int last_descent() const;  // -1 when there are none

  SignedPermutation inverse() const;

  // Right multiplication by the simple reflection s_m (m = 0 negates the
  // first entry; m >= 1 swaps positions m, m+1).  The window grows as needed.
  SignedPermutation times_simple(int m) const;

  // Left multiplication by s_m: acts on values (m=0 flips the sign of +-1;
  // m >= 1 swaps the values m and m+1 along with their negatives).
  SignedPermutation simple_times(int m) const;

  // Right multiplication by a reflection.
  SignedPermutation times(const Reflection& r) const;

  std::string to_string() const;  // comma-separated window, "()" for identity

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  explicit SignedPermutation(std::vector<int> window);
  std::vector<int> window_;
};

// (u o w)(i) = u(w(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w);

// Parses a comma-separated window such as "2,-4,-3,-1".  Whitespace around
// entries is allowed; an empty string denotes the identity.
SignedPermutation parse_signed_permutation(const std::string& text);

// The group of signed permutations of rank n, enumerated in a fixed
// lexicographic order on windows where values sort as -1 < 1 < -2 < 2 < ...
// Elements are addressable by index, which keeps sweeps deterministic and
// easy to partition across workers.
class GroupEnumeration {
 public:
  explicit GroupEnumeration(int n);
  int rank() const { return n_; }
  std::uint64_t size() const { return size_; }          // 2^n * n!
  SignedPermutation at(std::uint64_t index) const;      // unranks
 private:
  int n_;
  std::uint64_t size_;
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

}  // namespace vexkit
