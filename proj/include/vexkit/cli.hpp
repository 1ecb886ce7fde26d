#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vexkit {

/// Runs the command-line driver on `args` (program name excluded, natural
/// order).  Normal output goes to `out`, diagnostics to `err`.
///
/// Exit codes:
///   0  success / true verdict
///   1  false verdict (e.g. `check` on a non-vexillary input)
///   2  input error (unparseable or invalid arguments, rank cap exceeded)
///   3  verification found a counterexample
///   4  resource budget exhausted
///   70 internal invariant failure
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vexkit
