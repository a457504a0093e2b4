#pragma once

#include "ctl/certificate.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace ctl::cli {

/// 0 hyperbolic, 2 conditions violated, 3 inconclusive.
int exit_code(Verdict v);

/// Runs `conformal-type-lab <verb> [flags]`; args exclude the program name.
/// Returns the process exit status: 0 success, 1 input error, 2 conditions
/// violated, 3 inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctl::cli
