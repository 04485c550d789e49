#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ballspec/selfcheck.hpp"

namespace ballspec::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command. `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 usage or domain error, 2 numerical failure.
/// `j_override` replaces the Bessel kernel inside `selfcheck` (test harness).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const selfcheck::JEvaluator& j_override = {});

}  // namespace ballspec::cli
