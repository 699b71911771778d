#pragma once

#include <string>

namespace psiell {

/// Fixed notation with `digits` decimals for 1e-3 <= |v| < 1e15 (and for 0),
/// scientific with `digits` mantissa decimals otherwise. Non-finite values
/// print as "inf", "-inf", "nan".
std::string format_number(double v, int digits);

}  // namespace psiell
