#include "vexkit/transitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "vexkit/common.hpp"

namespace vexkit {

SignedPermutation max_grassmannian(const StrictPartition& lambda) {
  if (!is_strict_partition(lambda)) {
    throw std::invalid_argument("shape must be a strict partition");
  }
  if (lambda.empty()) return SignedPermutation::identity();
  const int n = lambda[0];
  std::vector<char> used(n + 1, 0);
  std::vector<int> window;
  for (int part : lambda) {
    window.push_back(-part);
    used[part] = 1;
  }
  for (int a = 1; a <= n; ++a) {
    if (!used[a]) window.push_back(a);
  }
  return SignedPermutation::from_oneline(std::move(window));
}

bool is_max_grassmannian(const SignedPermutation& w) {
  const std::vector<int> d = w.descents();
  return d.empty() || (d.size() == 1 && d[0] == 0);
}

StrictPartition mg_shape(const SignedPermutation& w) {
  if (!is_max_grassmannian(w)) {
    throw std::invalid_argument(w.to_string() +
                                " has a descent at a positive position");
  }
  StrictPartition lambda;
  for (int v : w.window()) {
    if (v < 0) lambda.push_back(-v);
  }
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

TransitionSet transitions(const SignedPermutation& w, int extra) {
  const int n = w.size();
  const int m = w.last_descent();
  if (m < 1) {
    throw std::invalid_argument(w.to_string() +
                                " has no descent at a positive position");
  }
  int j = 0;
  for (int t = n; t > m; --t) {
    if (w(t) < w(m)) {
      j = t;
      break;
    }
  }
  if (j == 0) throw std::logic_error("no matching column right of the pivot");

  const SignedPermutation v = w.times(Reflection::T(m, j));
  const int target_length = w.length();
  if (v.length() != target_length - 1) {
    throw std::logic_error("pivot step did not lower the length by one");
  }

  TransitionSet out;
  out.m = m;
  out.j = j;
  for (int i = 1; i < m; ++i) {
    SignedPermutation c = v.times(Reflection::T(i, m));
    if (c.length() == target_length) out.targets.push_back(std::move(c));
  }
  for (int i = 1; i < m; ++i) {
    SignedPermutation c = v.times(Reflection::S(i, m));
    if (c.length() == target_length) out.targets.push_back(std::move(c));
  }
  {
    SignedPermutation c = v.times(Reflection::S(m, m));
    if (c.length() == target_length) out.doubled = std::move(c);
  }
  for (int i = m + 1; i <= n + extra; ++i) {
    SignedPermutation c = v.times(Reflection::S(m, i));
    if (c.length() == target_length) out.targets.push_back(std::move(c));
  }
  return out;
}

SignedPermutation unique_transition(const SignedPermutation& w) {
  const TransitionSet set = transitions(w);  // throws on bad input
  const std::size_t count = set.targets.size() + (set.doubled ? 1 : 0);
  if (count != 1) {
    throw std::logic_error("expected exactly one transition for " +
                           w.to_string() + ", found " + std::to_string(count));
  }
  return set.doubled ? *set.doubled : set.targets.front();
}

bool PartitionDescLex::operator()(const StrictPartition& a,
                                  const StrictPartition& b) const {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SchurPExpansion SchurPExpansion::single(StrictPartition lambda, long long coeff) {
  SchurPExpansion out;
  out.add(lambda, coeff);
  return out;
}

void SchurPExpansion::add(const StrictPartition& lambda, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

void SchurPExpansion::add_scaled(const SchurPExpansion& other, long long factor) {
  for (const auto& [lambda, coeff] : other.terms_) add(lambda, coeff * factor);
}

std::string SchurPExpansion::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [lambda, coeff] : terms_) {
    out += "P[";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(lambda[i]);
    }
    out += "]: " + std::to_string(coeff) + "\n";
  }
  return out;
}

namespace {

struct StanleyContext {
  std::map<SignedPermutation, SchurPExpansion> memo;
  long long budget;
  int depth = 0;
};

const SchurPExpansion& stanley_rec(const SignedPermutation& w,
                                   StanleyContext& ctx) {
  auto it = ctx.memo.find(w);
  if (it != ctx.memo.end()) return it->second;
  if (--ctx.budget <= 0) {
    throw BudgetExceededError("transition recursion exceeded its node budget");
  }
  if (++ctx.depth > 20000) {
    throw BudgetExceededError("transition recursion nested too deeply");
  }
  SchurPExpansion result;
  if (w.is_identity()) {
    result = SchurPExpansion::single({}, 1);
  } else if (is_max_grassmannian(w)) {
    result = SchurPExpansion::single(mg_shape(w), 1);
  } else {
    const TransitionSet set = transitions(w);
    if (set.doubled) result.add_scaled(stanley_rec(*set.doubled, ctx), 2);
    for (const SignedPermutation& target : set.targets) {
      result.add_scaled(stanley_rec(target, ctx), 1);
    }
  }
  --ctx.depth;
  return ctx.memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

SchurPExpansion stanley_h(const SignedPermutation& w,
                          const StanleyOptions& options) {
  StanleyContext ctx;
  ctx.budget = options.budget;
  return stanley_rec(w, ctx);
}

}  // namespace vexkit
