#include "vexkit/common.hpp"

#include <cstdlib>

namespace vexkit {

int rank_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("VEXKIT_RANK_CAP")) {
      char* end = nullptr;
      long value = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && value >= 0 && value <= 64) {
        return static_cast<int>(value);
      }
    }
    return 7;
  }();
  return cap;
}

void require_rank(int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  if (n > rank_cap()) {
    throw RankCapError("rank " + std::to_string(n) + " exceeds cap " +
                       std::to_string(rank_cap()) +
                       " (set VEXKIT_RANK_CAP to raise it)");
  }
}

}  // namespace vexkit
