#include "vexkit/verify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vexkit/bruhat.hpp"
#include "vexkit/common.hpp"
#include "vexkit/diagram.hpp"
#include "vexkit/lyd.hpp"
#include "vexkit/signed_permutation.hpp"
#include "vexkit/transitions.hpp"
#include "vexkit/triple.hpp"
#include "vexkit/vexillary.hpp"
#include "vexkit/window_permutation.hpp"

namespace vexkit {

namespace {

constexpr std::size_t kKeepFailures = 3;

struct Failure {
  std::uint64_t index;
  std::string text;
};

struct SweepReport {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> tallies;
  std::vector<Failure> failures;  // earliest kKeepFailures, by index
  std::uint64_t failure_count = 0;
};

// Runs fn over all of rank n, striping indices across workers.  fn may add
// to its stripe's tallies and return failure text; results merge into an
// order-independent report.
template <typename Fn>
SweepReport sweep(int n, int jobs, std::size_t tally_count, Fn fn) {
  require_rank(n);
  const GroupEnumeration group(n);
  jobs = std::max(1, jobs);

  auto run_stripe = [&](int stripe, int step, std::vector<std::uint64_t>& tallies,
                        std::vector<Failure>& failures) {
    for (std::uint64_t i = stripe; i < group.size(); i += step) {
      const SignedPermutation w = group.at(i);
      std::optional<std::string> failed;
      try {
        failed = fn(w, tallies);
      } catch (const std::exception& e) {
        failed = std::string("exception: ") + e.what();
      }
      if (failed) failures.push_back({i, "w=" + w.to_string() + ": " + *failed});
    }
  };

  std::vector<std::vector<std::uint64_t>> tallies(
      jobs, std::vector<std::uint64_t>(tally_count, 0));
  std::vector<std::vector<Failure>> failures(jobs);
  if (jobs == 1) {
    run_stripe(0, 1, tallies[0], failures[0]);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back(
          [&, t] { run_stripe(t, jobs, tallies[t], failures[t]); });
    }
    for (auto& worker : workers) worker.join();
  }

  SweepReport report;
  report.checked = group.size();
  report.tallies.assign(tally_count, 0);
  for (int t = 0; t < jobs; ++t) {
    for (std::size_t i = 0; i < tally_count; ++i) {
      report.tallies[i] += tallies[t][i];
    }
    report.failure_count += failures[t].size();
    for (auto& f : failures[t]) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) { return a.index < b.index; });
  if (report.failures.size() > kKeepFailures) {
    report.failures.resize(kKeepFailures);
  }
  return report;
}

void absorb(SuiteResult& result, const SweepReport& report) {
  result.checked = report.checked;
  result.pass = result.pass && report.failure_count == 0;
  for (const Failure& f : report.failures) {
    result.counterexamples.push_back(f.text);
  }
  if (report.failure_count > report.failures.size()) {
    result.info.push_back(
        std::to_string(report.failure_count) +
        " failures total; showing the earliest " +
        std::to_string(report.failures.size()));
  }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

SuiteResult verify_equivalence(int n, int jobs) {
  SuiteResult result;
  result.name = "equivalence";
  result.n = n;
  result.pass = true;
  const SweepReport report =
      sweep(n, jobs, 1,
            [](const SignedPermutation& w,
               std::vector<std::uint64_t>& tallies) -> std::optional<std::string> {
              const bool triple = is_vexillary(w, VexMode::triple).vexillary;
              const bool essential = is_vexillary(w, VexMode::essential).vexillary;
              const bool odd = is_vexillary(w, VexMode::odd).vexillary;
              const bool even = is_vexillary(w, VexMode::even).vexillary;
              const bool patterns = is_vexillary(w, VexMode::patterns).vexillary;
              if (patterns) ++tallies[0];
              if (triple == essential && essential == odd && odd == even &&
                  even == patterns) {
                return std::nullopt;
              }
              return "verdicts disagree: triple=" + yesno(triple) +
                     " essential=" + yesno(essential) + " odd=" + yesno(odd) +
                     " even=" + yesno(even) + " patterns=" + yesno(patterns);
            });
  absorb(result, report);
  result.detail = "elements=" + std::to_string(report.checked) +
                  " vexillary=" + std::to_string(report.tallies[0]);
  return result;
}

SuiteResult verify_counting(int n, int jobs) {
  SuiteResult result;
  result.name = "counting";
  result.n = n;
  result.pass = true;

  const std::uint64_t counted = count_vexillary(n, jobs);
  const std::uint64_t formula = vn_formula(n);
  if (counted != formula) {
    result.pass = false;
    result.counterexamples.push_back(
        "vexillary count " + std::to_string(counted) +
        " differs from the closed form " + std::to_string(formula));
  }
  if (n <= 5) {
    const std::uint64_t egge = egge_count(n, jobs);
    result.info.push_back("egge=" + std::to_string(egge) +
                          " expected=" + std::to_string(formula));
    if (egge != formula) {
      result.pass = false;
      result.counterexamples.push_back(
          "even-embedding avoider count " + std::to_string(egge) +
          " differs from the closed form " + std::to_string(formula));
    }
  }
  result.checked = GroupEnumeration(n).size();
  result.detail = "vexillary=" + std::to_string(counted) +
                  " formula=" + std::to_string(formula);
  return result;
}

namespace {

// One edge of the removal/insertion correspondence: multiply w by a simple
// reflection on one side and compare the verdicts and images.
std::optional<std::string> check_edge(const SignedPermutation& w,
                                      const LabelledYoungDiagram& y, int m,
                                      Side side) {
  const SignedPermutation u =
      side == Side::right ? w.times_simple(m) : w.simple_times(m);
  const LabelledYoungDiagram z = side == Side::right ? y : lyd_dual(y);
  const bool vex_u = is_vexillary(u, VexMode::patterns).vexillary;
  const std::string tag =
      std::string(side == Side::right ? "right" : "left") + " m=" +
      std::to_string(m);

  if (u.length() == w.length() - 1) {
    const std::vector<int> ok = removable_labels(z);
    const bool removable = std::binary_search(ok.begin(), ok.end(), m);
    if (vex_u != removable) {
      return tag + ": one-step-down vexillarity " + yesno(vex_u) +
             " but label removable " + yesno(removable);
    }
    if (removable) {
      LabelledYoungDiagram expect = remove_label(z, m);
      if (side == Side::left) expect = lyd_dual(expect);
      if (!(lyd_of(u) == expect)) return tag + ": removal image mismatch";
    }
  } else {
    const std::vector<int> ok = insertable_labels(z);
    const bool insertable = std::binary_search(ok.begin(), ok.end(), m);
    if (vex_u != insertable) {
      return tag + ": one-step-up vexillarity " + yesno(vex_u) +
             " but label insertable " + yesno(insertable);
    }
    if (insertable) {
      LabelledYoungDiagram expect = insert_label(z, m);
      if (side == Side::left) expect = lyd_dual(expect);
      if (!(lyd_of(u) == expect)) return tag + ": insertion image mismatch";
    }
  }
  return std::nullopt;
}

}  // namespace

SuiteResult verify_lyd(int n, int jobs) {
  SuiteResult result;
  result.name = "lyd";
  result.n = n;
  result.pass = true;
  const SweepReport report = sweep(
      n, jobs, 2,
      [n](const SignedPermutation& w,
          std::vector<std::uint64_t>& tallies) -> std::optional<std::string> {
        const auto t = try_perm_to_triple(w);
        if (!t) return std::nullopt;
        ++tallies[0];
        const LabelledYoungDiagram y = lyd_from_triple(*t);

        if (!(lyd_to_triple(y) == *t)) return "triple round trip failed";
        if (!(lyd_dual(lyd_dual(y)) == y)) return "dual is not an involution";
        if (!(triple_to_perm(lyd_to_triple(lyd_dual(y))) == w.inverse())) {
          return "dual diagram does not describe the inverse";
        }
        if (lyd_min_rank(y) > n) return "minimum rank exceeds the ambient rank";
        if (partition_weight(y.shape()) != w.length()) {
          return "shape weight differs from the length";
        }

        for (int m = 0; m < n; ++m) {
          for (Side side : {Side::right, Side::left}) {
            ++tallies[1];
            if (auto failed = check_edge(w, y, m, side)) return failed;
          }
        }

        // insertion and removal undo each other on this diagram
        for (int m : insertable_labels(y)) {
          const LabelledYoungDiagram z = insert_label(y, m);
          const std::vector<int> back = removable_labels(z);
          if (!std::binary_search(back.begin(), back.end(), m) ||
              !(remove_label(z, m) == y)) {
            return "insert then remove of " + std::to_string(m) +
                   " does not restore the diagram";
          }
        }
        for (int m : removable_labels(y)) {
          const LabelledYoungDiagram z = remove_label(y, m);
          const std::vector<int> back = insertable_labels(z);
          if (!std::binary_search(back.begin(), back.end(), m) ||
              !(insert_label(z, m) == y)) {
            return "remove then insert of " + std::to_string(m) +
                   " does not restore the diagram";
          }
        }
        return std::nullopt;
      });
  absorb(result, report);
  result.detail = "vexillary=" + std::to_string(report.tallies[0]) +
                  " edges=" + std::to_string(report.tallies[1]);
  return result;
}

namespace {

bool same_transitions(const TransitionSet& a, const TransitionSet& b) {
  return a.m == b.m && a.j == b.j && a.targets == b.targets &&
         a.doubled == b.doubled;
}

}  // namespace

SuiteResult verify_transitions(int n, int jobs) {
  SuiteResult result;
  result.name = "transitions";
  result.n = n;
  result.pass = true;
  const SweepReport report = sweep(
      n, jobs, 2,
      [](const SignedPermutation& w,
         std::vector<std::uint64_t>& tallies) -> std::optional<std::string> {
        if (w.last_descent() < 1) return std::nullopt;
        ++tallies[0];
        const TransitionSet narrow = transitions(w, 1);
        const TransitionSet wide = transitions(w, 3);
        if (!same_transitions(narrow, wide)) {
          return "transition set changes when the search window widens";
        }
        if (!is_vexillary(w, VexMode::patterns).vexillary) return std::nullopt;
        ++tallies[1];

        const std::size_t count =
            narrow.targets.size() + (narrow.doubled ? 1 : 0);
        if (count != 1) {
          return "expected one transition, found " + std::to_string(count);
        }
        const SignedPermutation target =
            narrow.doubled ? *narrow.doubled : narrow.targets.front();

        // the target's diagram: decrement the last occurrence of the top label
        const LabelledYoungDiagram y = lyd_of(w);
        std::vector<int> labels = y.labels();
        const int top = labels.front();
        for (std::size_t i = labels.size(); i-- > 0;) {
          if (labels[i] == top) {
            --labels[i];
            break;
          }
        }
        if (!(lyd_of(target) == LabelledYoungDiagram::of(y.shape(), labels))) {
          return "transition target's diagram is not the label decrement";
        }

        const SchurPExpansion h = stanley_h(w);
        if (!(h == SchurPExpansion::single(triple_shape(perm_to_triple(w)), 1))) {
          return "expansion did not collapse to a single term";
        }
        return std::nullopt;
      });
  absorb(result, report);

  // positivity of the full recursion, kept to a small rank
  const int pn = std::min(n, 3);
  const SweepReport positivity = sweep(
      pn, jobs, 0,
      [](const SignedPermutation& w,
         std::vector<std::uint64_t>&) -> std::optional<std::string> {
        const SchurPExpansion h = stanley_h(w);
        for (const auto& [lambda, coeff] : h.terms()) {
          if (coeff <= 0) {
            return "nonpositive coefficient " + std::to_string(coeff) +
                   " at P[" + partition_to_string(lambda) + "]";
          }
        }
        return std::nullopt;
      });
  result.pass = result.pass && positivity.failure_count == 0;
  for (const Failure& f : positivity.failures) {
    result.counterexamples.push_back("positivity: " + f.text);
  }
  result.info.push_back("positivity checked over rank " + std::to_string(pn));

  result.detail = "pivots=" + std::to_string(report.tallies[0]) +
                  " vexillary=" + std::to_string(report.tallies[1]);
  return result;
}

SuiteResult verify_diagrams(int n, int jobs) {
  SuiteResult result;
  result.name = "diagrams";
  result.n = n;
  result.pass = true;

  const bool order_checks = n <= 4;
  // Shared read-only element list for the order-theoretic scans.
  std::vector<SignedPermutation> all;
  if (order_checks) {
    const GroupEnumeration group(n);
    all.reserve(group.size());
    for (std::uint64_t i = 0; i < group.size(); ++i) all.push_back(group.at(i));
  }

  const SweepReport report = sweep(
      n, jobs, 1,
      [n, order_checks, &all](
          const SignedPermutation& w,
          std::vector<std::uint64_t>& tallies) -> std::optional<std::string> {
        const SignedDiagram d = signed_diagram(w);
        if (static_cast<int>(d.boxes.size()) != w.length()) {
          return "diagram has " + std::to_string(d.boxes.size()) +
                 " boxes but length is " + std::to_string(w.length());
        }
        tallies[0] += d.boxes.size();

        const WindowPermutation v(w, Parity::odd, n);
        for (int p = 1; p <= n; ++p) {
          for (int q = 1; q <= n; ++q) {
            if (sp_rank(w, p, q) != wp_rank(v, p, q)) {
              return "rank formulas disagree at p=" + std::to_string(p) +
                     " q=" + std::to_string(q);
            }
          }
        }

        const std::set<RankCondition> block_essential = wp_essential_set(v);
        for (const RankCondition& c : block_essential) {
          const RankCondition mirror{c.k + c.p + c.q - 1, 1 - c.p, 1 - c.q};
          if (!block_essential.count(mirror)) {
            return "essential set is not mirror symmetric at " + c.to_string();
          }
        }

        const std::set<RankCondition> essential = sp_essential_set(w);
        for (const RankCondition& c : essential) {
          if (sp_rank(w, c.p, c.q) != c.k) {
            return "stored rank disagrees at " + c.to_string();
          }
        }

        if (!order_checks) return std::nullopt;
        // w is the unique order-minimum among the windows meeting all its
        // rank conditions...
        std::vector<const SignedPermutation*> satisfying;
        for (const SignedPermutation& u : all) {
          bool ok = true;
          for (const RankCondition& c : essential) {
            if (sp_rank(u, c.p, c.q) < c.k) {
              ok = false;
              break;
            }
          }
          if (ok) satisfying.push_back(&u);
        }
        bool self_found = false;
        for (const SignedPermutation* u : satisfying) {
          if (*u == w) self_found = true;
          if (!bruhat_leq(w, *u)) {
            return "not below the satisfying element " + u->to_string();
          }
        }
        if (!self_found) return "does not satisfy its own rank conditions";
        // ...and no condition is redundant
        for (const RankCondition& dropped : essential) {
          bool witnessed = false;
          for (const SignedPermutation& u : all) {
            if (u == w || sp_rank(u, dropped.p, dropped.q) >= dropped.k) continue;
            bool others = true;
            for (const RankCondition& c : essential) {
              if (c == dropped) continue;
              if (sp_rank(u, c.p, c.q) < c.k) {
                others = false;
                break;
              }
            }
            if (others) {
              witnessed = true;
              break;
            }
          }
          if (!witnessed) {
            return "condition " + dropped.to_string() +
                   " is implied by the others";
          }
        }
        return std::nullopt;
      });
  absorb(result, report);
  result.info.push_back(order_checks
                            ? std::string("order-minimality checked")
                            : std::string("order-minimality skipped (n > 4)"));
  result.detail = "elements=" + std::to_string(report.checked) +
                  " boxes=" + std::to_string(report.tallies[0]);
  return result;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "equivalence", "counting", "lyd", "transitions", "diagrams"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& suite, int n, int jobs) {
  std::vector<SuiteResult> out;
  auto run_one = [&](const std::string& name) {
    if (name == "equivalence") {
      out.push_back(verify_equivalence(n, jobs));
    } else if (name == "counting") {
      out.push_back(verify_counting(n, jobs));
    } else if (name == "lyd") {
      out.push_back(verify_lyd(n, jobs));
    } else if (name == "transitions") {
      out.push_back(verify_transitions(n, jobs));
    } else if (name == "diagrams") {
      out.push_back(verify_diagrams(n, jobs));
    } else {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  };
  if (suite == "all") {
    for (const std::string& name : suite_names()) run_one(name);
  } else {
    run_one(suite);
  }
  return out;
}

}  // namespace vexkit
