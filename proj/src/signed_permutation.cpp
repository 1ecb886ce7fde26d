#include "vexkit/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vexkit/common.hpp"

namespace vexkit {

namespace {

// Removes trailing fixed points so equal group elements share one window.
void trim(std::vector<int>& window) {
  while (!window.empty() && window.back() == static_cast<int>(window.size())) {
    window.pop_back();
  }
}

void check_window(const std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : window) {
    int a = std::abs(v);
    if (a < 1 || a > n) {
      throw std::invalid_argument("window entry " + std::to_string(v) +
                                  " out of range for size " + std::to_string(n));
    }
    if (seen[a]) {
      throw std::invalid_argument("window repeats absolute value " +
                                  std::to_string(a));
    }
    seen[a] = 1;
  }
}

}  // namespace

Reflection Reflection::T(int i, int j) {
  if (i < 1 || i >= j) throw std::invalid_argument("T(i,j) needs 1 <= i < j");
  return Reflection{Kind::transposition, i, j};
}

Reflection Reflection::S(int i, int j) {
  if (i < 1 || i > j) throw std::invalid_argument("S(i,j) needs 1 <= i <= j");
  return Reflection{Kind::sign_cross, i, j};
}

std::string Reflection::to_string() const {
  const char tag = kind == Kind::transposition ? 'T' : 'S';
  return std::string(1, tag) + "(" + std::to_string(i) + "," +
         std::to_string(j) + ")";
}

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  trim(window_);
}

SignedPermutation SignedPermutation::from_oneline(std::vector<int> window) {
  check_window(window);
  return SignedPermutation(std::move(window));
}

SignedPermutation SignedPermutation::longest(int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  std::vector<int> window(n);
  for (int i = 0; i < n; ++i) window[i] = -(i + 1);
  return SignedPermutation(std::move(window));
}

int SignedPermutation::operator()(int m) const {
  if (m == 0) return 0;
  if (m < 0) return -(*this)(-m);
  if (m > size()) return m;
  return window_[m - 1];
}

int SignedPermutation::position_of(int value) const {
  if (value == 0) throw std::invalid_argument("0 is not in the domain");
  int a = std::abs(value);
  if (a > size()) return value;  // fixed beyond the window
  int i = 0;
  while (std::abs(window_[i]) != a) ++i;
  int pos = i + 1;
  return window_[i] == value ? pos : -pos;
}

int SignedPermutation::length() const {
  const int n = size();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (j > i && window_[i] > window_[j]) ++total;
      if (window_[i] + window_[j] < 0) ++total;
    }
  }
  return total;
}

std::vector<int> SignedPermutation::descents() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) out.push_back(i);
  }
  return out;
}

int SignedPermutation::last_descent() const {
  const auto d = descents();
  return d.empty() ? -1 : d.back();
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = size();
  std::vector<int> inv(n);
  for (int i = 1; i <= n; ++i) {
    int v = window_[i - 1];
    if (v > 0) {
      inv[v - 1] = i;
    } else {
      inv[-v - 1] = -i;
    }
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::times_simple(int m) const {
  if (m < 0) throw std::invalid_argument("simple reflection index must be >= 0");
  std::vector<int> w = window_;
  const int need = std::max(m + 1, 1);
  for (int i = size(); i < need; ++i) w.push_back(i + 1);
  if (m == 0) {
    w[0] = -w[0];
  } else {
    std::swap(w[m - 1], w[m]);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple_times(int m) const {
  if (m < 0) throw std::invalid_argument("simple reflection index must be >= 0");
  std::vector<int> w = window_;
  // The affected values m, m+1 may sit past the current window as fixed
  // points, so grow it before editing.
  const int need = std::max(m + 1, 1);
  for (int i = size(); i < need; ++i) w.push_back(i + 1);
  for (int& v : w) {
    int a = std::abs(v);
    if (m == 0) {
      if (a == 1) v = -v;
    } else if (a == m) {
      v = v > 0 ? m + 1 : -(m + 1);
    } else if (a == m + 1) {
      v = v > 0 ? m : -m;
    }
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::times(const Reflection& r) const {
  std::vector<int> w = window_;
  for (int i = size(); i < r.j; ++i) w.push_back(i + 1);
  if (r.kind == Reflection::Kind::transposition) {
    std::swap(w[r.i - 1], w[r.j - 1]);
  } else if (r.i == r.j) {
    w[r.i - 1] = -w[r.i - 1];
  } else {
    int a = w[r.i - 1];
    int b = w[r.j - 1];
    w[r.i - 1] = -b;
    w[r.j - 1] = -a;
  }
  return SignedPermutation(std::move(w));
}

std::string SignedPermutation::to_string() const {
  if (window_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(window_[i]);
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w) {
  const int n = std::max(u.size(), w.size());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = u(w(i));
  return SignedPermutation::from_oneline(std::move(out));
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  std::string body = text;
  // Trim surrounding whitespace; "()" and "" both mean the identity.
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!body.empty() && is_space(body.front())) body.erase(body.begin());
  while (!body.empty() && is_space(body.back())) body.pop_back();
  if (body.empty() || body == "()") return SignedPermutation::identity();

  std::vector<int> window;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse window entry '" + item + "'");
    }
    while (pos < item.size() && is_space(item[pos])) ++pos;
    if (pos != item.size()) {
      throw std::invalid_argument("cannot parse window entry '" + item + "'");
    }
    window.push_back(value);
  }
  if (!ss.eof() || body.back() == ',') {
    throw std::invalid_argument("trailing comma in window");
  }
  return SignedPermutation::from_oneline(std::move(window));
}

GroupEnumeration::GroupEnumeration(int n) : n_(n) {
  require_rank(n);
  size_ = 1;
  for (int k = 1; k <= n; ++k) size_ *= 2ull * k;
}

SignedPermutation GroupEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("enumeration index out of range");
  // Precompute block sizes: block[k] = |W_k| = 2^k * k!.
  std::vector<std::uint64_t> block(n_ + 1, 1);
  for (int k = 1; k <= n_; ++k) block[k] = block[k - 1] * 2ull * k;

  std::vector<int> remaining(n_);
  for (int i = 0; i < n_; ++i) remaining[i] = i + 1;
  std::vector<int> window;
  window.reserve(n_);
  for (int pos = 0; pos < n_; ++pos) {
    const int k = n_ - pos;  // choices left: 2k signed values
    const std::uint64_t sub = block[k - 1];
    const auto digit = static_cast<int>(index / sub);
    index %= sub;
    const int slot = digit / 2;
    const int value = remaining[slot];
    window.push_back(digit % 2 == 0 ? -value : value);
    remaining.erase(remaining.begin() + slot);
  }
  return SignedPermutation::from_oneline(std::move(window));
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) {
  return os << w.to_string();
}

}  // namespace vexkit
