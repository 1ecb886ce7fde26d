#include "vexkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexkit/common.hpp"
#include "vexkit/diagram.hpp"
#include "vexkit/json_io.hpp"
#include "vexkit/lyd.hpp"
#include "vexkit/signed_permutation.hpp"
#include "vexkit/transitions.hpp"
#include "vexkit/triple.hpp"
#include "vexkit/verify.hpp"
#include "vexkit/vexillary.hpp"

namespace vexkit {
namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFalseVerdict = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 70;

// Parses "1,-2,3" into {1,-2,3}.  "" and "()" are the empty list.  Unlike
// parse_signed_permutation this keeps the raw entries (no canonicalization),
// which the render path needs to honour explicitly written fixed points.
std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::string body = text;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!body.empty() && is_space(body.front())) body.erase(body.begin());
  while (!body.empty() && is_space(body.back())) body.pop_back();
  if (body.empty() || body == "()") return {};

  std::vector<int> values;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("cannot parse ") + what +
                                  " entry '" + item + "'");
    }
    while (pos < item.size() && is_space(item[pos])) ++pos;
    if (pos != item.size()) {
      throw std::invalid_argument(std::string("cannot parse ") + what +
                                  " entry '" + item + "'");
    }
    values.push_back(value);
  }
  if (!ss.eof() || body.back() == ',') {
    throw std::invalid_argument(std::string("trailing comma in ") + what);
  }
  return values;
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::string format_pattern(const std::vector<int>& pattern) {
  return "[" + join_ints(pattern, " ") + "]";
}

std::string format_positions(const std::vector<int>& positions) {
  return "(" + join_ints(positions, ",") + ")";
}

std::string format_conditions(const std::set<RankCondition>& conditions) {
  if (conditions.empty()) return "()";
  std::ostringstream os;
  bool first = true;
  for (const auto& c : conditions) {
    if (!first) os << ' ';
    os << c.to_string();
    first = false;
  }
  return os.str();
}

struct FormatFlag {
  std::string value = "text";
  bool json() const { return value == "json"; }
};

void add_format_flag(CLI::App* cmd, FormatFlag& flag) {
  cmd->add_option("--format", flag.value, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void emit_json(std::ostream& out, const ordered_json& j) {
  out << j.dump() << '\n';
}

// --- build ------------------------------------------------------------

struct BuildArgs {
  std::string k, p, q;
  FormatFlag format;
};

int run_build(const BuildArgs& a, std::ostream& out) {
  const Triple t = Triple::of(parse_int_list(a.k, "k"), parse_int_list(a.p, "p"),
                              parse_int_list(a.q, "q"));
  const SignedPermutation w = triple_to_perm(t);
  const StrictPartition shape = triple_shape(t);
  const auto essential = sp_essential_set(w);
  if (a.format.json()) {
    ordered_json j = to_json(w);
    j["length"] = w.length();
    j["shape"] = shape;
    j["essential"] = to_json(essential);
    emit_json(out, j);
  } else {
    out << "w: " << w.to_string() << '\n';
    out << "length: " << w.length() << '\n';
    out << "shape: " << partition_to_string(shape) << '\n';
    out << "essential: " << format_conditions(essential) << '\n';
  }
  return kExitSuccess;
}

// --- check ------------------------------------------------------------

struct CheckArgs {
  std::string window;
  std::string mode = "patterns";
  FormatFlag format;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const SignedPermutation w = parse_signed_permutation(a.window);
  const VexillaryReport report = is_vexillary(w, parse_vex_mode(a.mode));
  if (a.format.json()) {
    ordered_json j;
    j["vexillary"] = report.vexillary;
    j["mode"] = vex_mode_name(report.mode);
    if (report.witness_pattern) {
      ordered_json witness;
      witness["pattern"] = *report.witness_pattern;
      witness["positions"] = *report.witness_positions;
      j["witness"] = witness;
    }
    emit_json(out, j);
  } else {
    out << "vexillary: " << (report.vexillary ? "yes" : "no") << '\n';
    if (report.witness_pattern) {
      out << "witness: " << format_pattern(*report.witness_pattern) << " at "
          << format_positions(*report.witness_positions) << '\n';
    }
  }
  return report.vexillary ? kExitSuccess : kExitFalseVerdict;
}

// --- verify -----------------------------------------------------------

struct VerifyArgs {
  int n = 0;
  std::string suite = "all";
  int jobs = 1;
  FormatFlag format;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  const std::vector<SuiteResult> results = run_suites(a.suite, a.n, a.jobs);
  bool all_pass = true;
  if (a.format.json()) {
    ordered_json j = ordered_json::array();
    for (const auto& r : results) {
      ordered_json item;
      item["suite"] = r.name;
      item["n"] = r.n;
      item["pass"] = r.pass;
      item["checked"] = r.checked;
      item["detail"] = r.detail;
      item["info"] = r.info;
      item["counterexamples"] = r.counterexamples;
      j.push_back(std::move(item));
      all_pass = all_pass && r.pass;
    }
    emit_json(out, j);
  } else {
    for (const auto& r : results) {
      const std::string prefix = r.name + " n=" + std::to_string(r.n) + ": ";
      for (const auto& line : r.info) out << prefix << line << '\n';
      for (const auto& ce : r.counterexamples) {
        out << prefix << "counterexample: " << ce << '\n';
      }
      out << prefix << r.detail << (r.pass ? " PASS" : " FAIL") << '\n';
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? kExitSuccess : kExitCounterexample;
}

// --- render -----------------------------------------------------------

struct RenderArgs {
  std::string window;
  bool window_given = false;
  std::string k, p, q;
  std::string what = "diagram";
};

int run_render(const RenderArgs& a, std::ostream& out) {
  const bool triple_given = !a.k.empty() || !a.p.empty() || !a.q.empty();
  if (a.window_given && triple_given) {
    throw std::invalid_argument(
        "give either a permutation window or a triple (-k/-p/-q), not both");
  }

  if (a.what == "diagram") {
    if (triple_given) {
      const Triple t = Triple::of(parse_int_list(a.k, "k"),
                                  parse_int_list(a.p, "p"),
                                  parse_int_list(a.q, "q"));
      const SignedPermutation w = triple_to_perm(t);
      out << render_signed_diagram(w, w.size());
    } else {
      const std::vector<int> raw = parse_int_list(a.window, "window");
      const SignedPermutation w =
          SignedPermutation::from_oneline(std::vector<int>(raw));
      // Honour explicitly written fixed points: "1,2,3" draws a 3x3 grid.
      out << render_signed_diagram(w, static_cast<int>(raw.size()));
    }
  } else {  // lyd
    LabelledYoungDiagram y;
    if (triple_given) {
      const Triple t = Triple::of(parse_int_list(a.k, "k"),
                                  parse_int_list(a.p, "p"),
                                  parse_int_list(a.q, "q"));
      y = lyd_from_triple(triple_reduce(t));
    } else {
      y = lyd_of(parse_signed_permutation(a.window));
    }
    out << render_lyd(y);
  }
  return kExitSuccess;
}

// --- stanley ----------------------------------------------------------

struct StanleyArgs {
  std::string window;
  long long budget = 1'000'000;
  FormatFlag format;
};

int run_stanley(const StanleyArgs& a, std::ostream& out) {
  if (a.budget < 1) throw std::invalid_argument("--budget must be at least 1");
  const SignedPermutation w = parse_signed_permutation(a.window);
  StanleyOptions options;
  options.budget = static_cast<std::uint64_t>(a.budget);
  const SchurPExpansion expansion = stanley_h(w, options);
  if (a.format.json()) {
    emit_json(out, to_json(expansion));
  } else {
    out << expansion.to_string();
  }
  return kExitSuccess;
}

// --- essential --------------------------------------------------------

struct EssentialArgs {
  std::string window;
  FormatFlag format;
};

int run_essential(const EssentialArgs& a, std::ostream& out) {
  const SignedPermutation w = parse_signed_permutation(a.window);
  const auto essential = sp_essential_set(w);
  if (a.format.json()) {
    emit_json(out, to_json(essential));
  } else {
    for (const auto& c : essential) out << c.to_string() << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Combinatorics of vexillary signed permutations"};
  app.name("vexkit");
  app.require_subcommand(0, 1);

  BuildArgs build_args;
  CLI::App* build_cmd = app.add_subcommand(
      "build", "Construct the permutation described by a triple");
  build_cmd->add_option("-k", build_args.k, "Comma-separated k row");
  build_cmd->add_option("-p", build_args.p, "Comma-separated p row");
  build_cmd->add_option("-q", build_args.q, "Comma-separated q row");
  add_format_flag(build_cmd, build_args.format);

  CheckArgs check_args;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Decide whether a permutation is vexillary");
  check_cmd->add_option("window", check_args.window,
                        "Signed permutation window, e.g. 2,-4,-3,-1");
  check_cmd
      ->add_option("--mode", check_args.mode,
                   "Which characterization to evaluate")
      ->check(CLI::IsMember(
          {"triple", "essential", "odd", "even", "patterns", "all"}))
      ->capture_default_str();
  add_format_flag(check_cmd, check_args.format);

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Exhaustively verify structure theorems");
  verify_cmd->add_option("--n", verify_args.n, "Verify over the whole rank-n group")
      ->required();
  verify_cmd
      ->add_option("--suite", verify_args.suite,
                   "equivalence | counting | lyd | transitions | diagrams | all")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker thread count")
      ->capture_default_str();
  add_format_flag(verify_cmd, verify_args.format);

  RenderArgs render_args;
  CLI::App* render_cmd =
      app.add_subcommand("render", "Draw a diagram or a labelled shape");
  CLI::Option* render_window = render_cmd->add_option(
      "window", render_args.window, "Signed permutation window");
  render_cmd->add_option("-k", render_args.k, "Comma-separated k row");
  render_cmd->add_option("-p", render_args.p, "Comma-separated p row");
  render_cmd->add_option("-q", render_args.q, "Comma-separated q row");
  render_cmd
      ->add_option("--what", render_args.what, "What to draw: diagram | lyd")
      ->check(CLI::IsMember({"diagram", "lyd"}))
      ->capture_default_str();

  StanleyArgs stanley_args;
  CLI::App* stanley_cmd = app.add_subcommand(
      "stanley", "Expand the Stanley symmetric function of a permutation");
  stanley_cmd->add_option("window", stanley_args.window,
                          "Signed permutation window");
  stanley_cmd
      ->add_option("--budget", stanley_args.budget,
                   "Node budget for the transition recursion")
      ->capture_default_str();
  add_format_flag(stanley_cmd, stanley_args.format);

  EssentialArgs essential_args;
  CLI::App* essential_cmd = app.add_subcommand(
      "essential", "List the essential rank conditions of a permutation");
  essential_cmd->add_option("window", essential_args.window,
                            "Signed permutation window");
  add_format_flag(essential_cmd, essential_args.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (build_cmd->parsed()) return run_build(build_args, out);
    if (check_cmd->parsed()) return run_check(check_args, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
    if (render_cmd->parsed()) {
      render_args.window_given = render_window->count() > 0;
      return run_render(render_args, out);
    }
    if (stanley_cmd->parsed()) return run_stanley(stanley_args, out);
    if (essential_cmd->parsed()) return run_essential(essential_args, out);
    out << app.help();
    return kExitSuccess;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const RankCapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace vexkit
