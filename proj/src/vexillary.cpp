#include "vexkit/vexillary.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "vexkit/common.hpp"
#include "vexkit/diagram.hpp"
#include "vexkit/triple.hpp"
#include "vexkit/window_permutation.hpp"

namespace vexkit {

const std::vector<SignedPattern>& nine_patterns() {
  static const std::vector<SignedPattern> patterns = {
      {2, 1},
      {-3, 2, -1},
      {-4, -1, -2, 3},
      {-4, 1, -2, 3},
      {-3, -4, -1, -2},
      {-3, -4, 1, -2},
      {-2, -3, 4, -1},
      {2, -3, 4, -1},
      {3, -4, -1, -2},
  };
  return patterns;
}

namespace {

// Depth-first search for an index subsequence matching the pattern under
// `fits` (a pairwise compatibility test between chosen entries).
template <typename Fits>
bool dfs_pick(std::size_t depth, std::size_t start, std::size_t n,
              std::size_t m, std::vector<int>& picked, const Fits& fits) {
  if (depth == m) return true;
  for (std::size_t i = start; i + (m - depth) <= n; ++i) {
    if (!fits(depth, static_cast<int>(i))) continue;
    picked[depth] = static_cast<int>(i);
    if (dfs_pick(depth + 1, i + 1, n, m, picked, fits)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_pattern(const std::vector<int>& word,
                                             const std::vector<int>& pattern) {
  const std::size_t n = word.size();
  const std::size_t m = pattern.size();
  if (m > n) return std::nullopt;
  std::vector<int> picked(m, 0);
  auto fits = [&](std::size_t depth, int i) {
    for (std::size_t t = 0; t < depth; ++t) {
      if ((word[picked[t]] < word[i]) != (pattern[t] < pattern[depth])) {
        return false;
      }
    }
    return true;
  };
  if (!dfs_pick(0, 0, n, m, picked, fits)) return std::nullopt;
  for (int& i : picked) ++i;  // report 1-based indices
  return picked;
}

std::optional<std::vector<int>> find_signed_pattern(const SignedPermutation& w,
                                                    const SignedPattern& pattern) {
  const std::size_t n = static_cast<std::size_t>(w.size());
  const std::size_t m = pattern.size();
  if (m > n) return std::nullopt;
  const std::vector<int>& window = w.window();
  std::vector<int> picked(m, 0);
  auto fits = [&](std::size_t depth, int i) {
    if ((window[i] > 0) != (pattern[depth] > 0)) return false;
    for (std::size_t t = 0; t < depth; ++t) {
      if ((std::abs(window[picked[t]]) < std::abs(window[i])) !=
          (std::abs(pattern[t]) < std::abs(pattern[depth]))) {
        return false;
      }
    }
    return true;
  };
  if (!dfs_pick(0, 0, n, m, picked, fits)) return std::nullopt;
  for (int& i : picked) ++i;
  return picked;
}

VexMode parse_vex_mode(const std::string& name) {
  if (name == "triple") return VexMode::triple;
  if (name == "essential") return VexMode::essential;
  if (name == "odd") return VexMode::odd;
  if (name == "even") return VexMode::even;
  if (name == "patterns") return VexMode::patterns;
  if (name == "all") return VexMode::all;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

std::string vex_mode_name(VexMode mode) {
  switch (mode) {
    case VexMode::triple: return "triple";
    case VexMode::essential: return "essential";
    case VexMode::odd: return "odd";
    case VexMode::even: return "even";
    case VexMode::patterns: return "patterns";
    case VexMode::all: return "all";
  }
  return "?";
}

namespace {

VexillaryReport check_embedding(const SignedPermutation& w, Parity parity,
                                VexMode mode) {
  const WindowPermutation v(w, parity);
  const std::vector<int> word = v.word();
  const std::vector<int> pattern = {2, 1, 4, 3};
  VexillaryReport report;
  report.mode = mode;
  auto hit = find_pattern(word, pattern);
  if (!hit) {
    report.vexillary = true;
    return report;
  }
  report.vexillary = false;
  report.witness_pattern = pattern;
  std::vector<int> block_positions;
  for (int idx : *hit) block_positions.push_back(v.positions()[idx - 1]);
  report.witness_positions = std::move(block_positions);
  return report;
}

VexillaryReport check_patterns(const SignedPermutation& w) {
  VexillaryReport report;
  report.mode = VexMode::patterns;
  for (const SignedPattern& pattern : nine_patterns()) {
    if (auto hit = find_signed_pattern(w, pattern)) {
      report.vexillary = false;
      report.witness_pattern = pattern;
      report.witness_positions = *hit;
      return report;
    }
  }
  report.vexillary = true;
  return report;
}

bool check_essential(const SignedPermutation& w) {
  std::vector<std::pair<int, int>> pq;
  for (const RankCondition& cond : sp_essential_set(w)) {
    if (cond.q <= 0) return false;
    pq.emplace_back(cond.p, cond.q);
  }
  std::sort(pq.begin(), pq.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second > b.second;
  });
  for (std::size_t i = 0; i + 1 < pq.size(); ++i) {
    if (pq[i].second < pq[i + 1].second) return false;
  }
  return true;
}

}  // namespace

VexillaryReport is_vexillary(const SignedPermutation& w, VexMode mode) {
  switch (mode) {
    case VexMode::triple: {
      VexillaryReport report;
      report.mode = mode;
      report.vexillary = try_perm_to_triple(w).has_value();
      return report;
    }
    case VexMode::essential: {
      VexillaryReport report;
      report.mode = mode;
      report.vexillary = check_essential(w);
      return report;
    }
    case VexMode::odd:
    case VexMode::even:
      return check_embedding(w, mode == VexMode::odd ? Parity::odd : Parity::even,
                             mode);
    case VexMode::patterns:
      return check_patterns(w);
    case VexMode::all: {
      const bool a = try_perm_to_triple(w).has_value();
      const bool b = check_essential(w);
      const bool c = check_embedding(w, Parity::odd, VexMode::odd).vexillary;
      const bool d = check_embedding(w, Parity::even, VexMode::even).vexillary;
      VexillaryReport report = check_patterns(w);
      report.mode = VexMode::all;
      if (a != report.vexillary || b != report.vexillary ||
          c != report.vexillary || d != report.vexillary) {
        throw std::logic_error(
            "vexillarity tests disagree on " + w.to_string() + ": triple=" +
            std::to_string(a) + " essential=" + std::to_string(b) + " odd=" +
            std::to_string(c) + " even=" + std::to_string(d) +
            " patterns=" + std::to_string(report.vexillary));
      }
      return report;
    }
  }
  throw std::invalid_argument("unknown mode");
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = checked_mul(out, static_cast<std::uint64_t>(n - k + i)) / i;
  }
  return out;
}

// Counts enumeration indices whose element satisfies pred, striped over jobs
// so the total is independent of the worker count.
template <typename Pred>
std::uint64_t striped_count(int n, int jobs, Pred pred) {
  require_rank(n);
  const GroupEnumeration group(n);
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < group.size(); ++i) {
      if (pred(group.at(i))) ++count;
    }
    return count;
  }
  std::vector<std::uint64_t> partial(jobs, 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::uint64_t i = t; i < group.size(); i += jobs) {
        if (pred(group.at(i))) ++partial[t];
      }
    });
  }
  for (auto& worker : workers) worker.join();
  std::uint64_t count = 0;
  for (std::uint64_t part : partial) count += part;
  return count;
}

}  // namespace

std::uint64_t catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan of negative index");
  return binomial(2 * k, k) / (k + 1);
}

std::uint64_t vn_formula(int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  std::uint64_t total = 0;
  for (int t = 0; t <= n; ++t) {
    const std::uint64_t b = binomial(n, t);
    total = checked_add(total, checked_mul(checked_mul(b, b), catalan(t)));
  }
  return total;
}

std::uint64_t count_vexillary(int n, int jobs) {
  return striped_count(n, jobs, [](const SignedPermutation& w) {
    return is_vexillary(w, VexMode::patterns).vexillary;
  });
}

std::uint64_t egge_count(int n, int jobs) {
  const std::vector<int> pattern = {4, 3, 2, 1};
  return striped_count(n, jobs, [n, &pattern](const SignedPermutation& w) {
    const WindowPermutation v(w, Parity::even, n);
    return !find_pattern(v.word(), pattern).has_value();
  });
}

}  // namespace vexkit
