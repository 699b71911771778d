#include "psiell/format.hpp"

#include <cmath>
#include <cstdio>

namespace psiell {

std::string format_number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  const double a = std::abs(v);
  const bool fixed = a == 0.0 || (a >= 1e-3 && a < 1e15);
  char buf[64];
  std::snprintf(buf, sizeof buf, fixed ? "%.*f" : "%.*e", digits, v);
  return buf;
}

}  // namespace psiell
