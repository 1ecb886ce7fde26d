#include "vexkit/window_permutation.hpp"

#include <stdexcept>

namespace vexkit {

WindowPermutation::WindowPermutation(const SignedPermutation& w, Parity parity,
                                     int radius)
    : parity_(parity), radius_(radius < 0 ? w.size() : radius) {
  if (radius_ < w.size()) {
    throw std::invalid_argument("block radius " + std::to_string(radius_) +
                                " does not cover the window of " + w.to_string());
  }
  for (int pos = -radius_; pos <= radius_; ++pos) {
    if (pos == 0 && parity_ == Parity::even) continue;
    positions_.push_back(pos);
    values_.push_back(w(pos));
  }
  inverse_.assign(2 * radius_ + 1, 0);
  for (std::size_t t = 0; t < positions_.size(); ++t) {
    inverse_[values_[t] + radius_] = positions_[t];
  }
}

std::vector<int> WindowPermutation::word() const { return values_; }

int WindowPermutation::operator()(int pos) const {
  if (pos < -radius_ || pos > radius_) return pos;
  if (pos == 0) return 0;  // even blocks skip 0, odd ones fix it
  // positions_ is -r..r (0 dropped for even); index arithmetic:
  int idx = pos + radius_;
  if (parity_ == Parity::even && pos > 0) --idx;
  return values_[idx];
}

int WindowPermutation::inverse_at(int value) const {
  if (value < -radius_ || value > radius_) return value;
  if (value == 0) return 0;
  return inverse_[value + radius_];
}

}  // namespace vexkit
