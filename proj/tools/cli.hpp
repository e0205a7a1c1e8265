#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geocrystal::cli {

enum ExitCode : int { ok = 0, counterexample = 1, usage = 2, resource = 3 };

/// Runs one invocation. Structured output goes to `out` in a single write,
/// the human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace geocrystal::cli
