#include "vexkit/triple.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "vexkit/diagram.hpp"
#include "vexkit/window_permutation.hpp"

namespace vexkit {

bool is_strict_partition(const StrictPartition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) return false;
    if (i + 1 < lambda.size() && lambda[i] <= lambda[i + 1]) return false;
  }
  return true;
}

int partition_weight(const StrictPartition& lambda) {
  int total = 0;
  for (int part : lambda) total += part;
  return total;
}

std::string partition_to_string(const StrictPartition& lambda) {
  if (lambda.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out;
}

Triple Triple::of(std::vector<int> k, std::vector<int> p, std::vector<int> q) {
  const std::size_t s = k.size();
  if (p.size() != s || q.size() != s) {
    throw std::invalid_argument("k, p, q must have equal lengths");
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (k[i] <= 0 || p[i] <= 0 || q[i] <= 0) {
      throw std::invalid_argument("entries must be positive");
    }
  }
  for (std::size_t i = 0; i + 1 < s; ++i) {
    if (k[i] >= k[i + 1]) {
      throw std::invalid_argument("k must be strictly increasing");
    }
    if (p[i] < p[i + 1]) {
      throw std::invalid_argument("p must be weakly decreasing");
    }
    if (q[i] < q[i + 1]) {
      throw std::invalid_argument("q must be weakly decreasing");
    }
    if (k[i + 1] - k[i] > (p[i] - p[i + 1]) + (q[i] - q[i + 1])) {
      throw std::invalid_argument("(*) violated at i=" + std::to_string(i + 1));
    }
  }
  Triple t;
  t.k_ = std::move(k);
  t.p_ = std::move(p);
  t.q_ = std::move(q);
  return t;
}

bool Triple::essential() const {
  for (int i = 0; i + 1 < size(); ++i) {
    if (k_[i + 1] - k_[i] == (p_[i] - p_[i + 1]) + (q_[i] - q_[i + 1])) {
      return false;
    }
  }
  return true;
}

std::string Triple::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out.empty() ? std::string("-") : out;
  };
  return "k=" + join(k_) + " p=" + join(p_) + " q=" + join(q_);
}

Triple triple_reduce(const Triple& t) {
  std::vector<int> k = t.k(), p = t.p(), q = t.q();
  for (;;) {
    int hit = -1;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      if (k[i + 1] - k[i] == (p[i] - p[i + 1]) + (q[i] - q[i + 1])) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit < 0) break;
    k.erase(k.begin() + hit);
    p.erase(p.begin() + hit);
    q.erase(q.begin() + hit);
  }
  return Triple::of(std::move(k), std::move(p), std::move(q));
}

bool triple_equivalent(const Triple& a, const Triple& b) {
  return triple_reduce(a) == triple_reduce(b);
}

SignedPermutation triple_to_perm(const Triple& t) {
  std::map<int, int> placed;  // position -> value
  std::set<int> used;         // magnitudes
  int k_prev = 0;
  for (int i = 0; i < t.size(); ++i) {
    const int count = t.k()[i] - k_prev;
    k_prev = t.k()[i];
    // the `count` smallest unused magnitudes >= q[i]
    std::vector<int> magnitudes;
    for (int m = t.q()[i]; static_cast<int>(magnitudes.size()) < count; ++m) {
      if (!used.count(m)) magnitudes.push_back(m);
    }
    // place most negative first, scanning right from position p[i]
    int pos = t.p()[i];
    for (auto it = magnitudes.rbegin(); it != magnitudes.rend(); ++it) {
      while (placed.count(pos)) ++pos;
      placed[pos] = -*it;
      used.insert(*it);
      ++pos;
    }
  }
  int n = 0;
  if (!placed.empty()) n = placed.rbegin()->first;
  if (!used.empty()) n = std::max(n, *used.rbegin());
  std::vector<int> rest;
  for (int a = 1; a <= n; ++a) {
    if (!used.count(a)) rest.push_back(a);
  }
  std::vector<int> window;
  window.reserve(n);
  std::size_t r = 0;
  for (int i = 1; i <= n; ++i) {
    auto it = placed.find(i);
    window.push_back(it != placed.end() ? it->second : rest[r++]);
  }
  return SignedPermutation::from_oneline(std::move(window));
}

StrictPartition triple_shape(const Triple& t) {
  StrictPartition lambda;
  int k_prev = 0;
  for (int i = 0; i < t.size(); ++i) {
    for (int x = k_prev + 1; x <= t.k()[i]; ++x) {
      lambda.push_back(t.p()[i] + t.q()[i] - 1 + t.k()[i] - x);
    }
    k_prev = t.k()[i];
  }
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

Triple triple_dual(const Triple& t) { return Triple::of(t.k(), t.q(), t.p()); }

std::optional<Triple> try_perm_to_triple(const SignedPermutation& w) {
  const WindowPermutation v(w, Parity::odd);
  const std::vector<Box> corners = wp_se_corners(v);
  // every pair of corners must be comparable: one weakly below-left of the other
  for (std::size_t x = 0; x < corners.size(); ++x) {
    for (std::size_t y = x + 1; y < corners.size(); ++y) {
      const Box& c1 = corners[x];
      const Box& c2 = corners[y];
      const bool le = c1.row >= c2.row && c1.col <= c2.col;
      const bool ge = c2.row >= c1.row && c2.col <= c1.col;
      if (!le && !ge) return std::nullopt;
    }
  }
  std::vector<int> k, p, q;
  for (const Box& c : corners) {
    if (c.col >= 0) continue;
    if (c.row < 0) return std::nullopt;
    p.push_back(-c.col);
    q.push_back(c.row + 1);
    k.push_back(wp_rank(v, -c.col, c.row + 1));
  }
  Triple t;
  try {
    t = Triple::of(std::move(k), std::move(p), std::move(q));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (!t.essential()) return std::nullopt;
  if (triple_to_perm(t) != w) return std::nullopt;
  return t;
}

Triple perm_to_triple(const SignedPermutation& w) {
  auto t = try_perm_to_triple(w);
  if (!t) {
    throw std::invalid_argument("not vexillary: " + w.to_string() +
                                " has no describing triple");
  }
  return *t;
}

}  // namespace vexkit
