#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "psiell/errors.hpp"

namespace psiell::detail {

/// Solves g(x) = 0 on [lo, hi] for monotone g with a sign change across the
/// bracket. Newton steps from x0 are accepted while they stay strictly inside
/// the current bracket; otherwise the bracket is bisected. Stops when a step
/// or the bracket shrinks below a few ulps of x.
template <typename G, typename DG>
double bracketed_newton(G g, DG dg, double lo, double hi, double x0, int max_iterations,
                        const char* who) {
  constexpr double kStepTol = 4.0 * std::numeric_limits<double>::epsilon();
  const bool increasing = g(hi) > g(lo);
  double x = x0;
  for (int it = 0; it < max_iterations; ++it) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    // Keep the root inside [lo, hi].
    if ((gx > 0.0) == increasing) {
      hi = x;
    } else {
      lo = x;
    }
    double next = x - gx / dg(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= kStepTol * std::abs(x) || hi - lo <= kStepTol * std::abs(x)) {
      return next;
    }
    x = next;
  }
  throw ConvergenceError(std::string(who) + ": no convergence within iteration cap");
}

}  // namespace psiell::detail
