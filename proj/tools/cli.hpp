#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psiell::cli {

/// Runs the command line (args excludes the program name) and returns the
/// exit code: 0 success, 1 verification failure, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a real argument. Accepts plain decimal numbers and the literals
/// 3-2sqrt2, sqrt2-1, 1/sqrt2, pi, pi/2. Throws std::invalid_argument.
double parse_real(const std::string& text);

}  // namespace psiell::cli
