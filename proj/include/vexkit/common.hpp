#pragma once

#include <stdexcept>
#include <string>

namespace vexkit {

// Thrown when an exhaustive computation is asked to run beyond the
// configured rank cap (see rank_cap below).
class RankCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a transition expansion exceeds its node budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest rank for which exhaustive group sweeps are allowed.  Defaults to 7;
// the environment variable VEXKIT_RANK_CAP overrides it.
int rank_cap();

// Throws RankCapError if n exceeds rank_cap(), or std::invalid_argument if
// n is negative.
void require_rank(int n);

}  // namespace vexkit
