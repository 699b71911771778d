#pragma once

// Maclaurin expansions in q = r^2 used where a difference of K and E cancels.
// All coefficients are built from a_n = ((2n-1)!!/(2n)!!)^2, the coefficients
// of (2/pi) K(r) = sum a_n q^n.

#include <cmath>
#include <limits>
#include <numbers>

#include "psiell/errors.hpp"

namespace psiell::detail {

inline constexpr int kMaxSeriesTerms = 400;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Sums c_n q^n for n >= first, with c_n produced by next(n). All terms
/// must be of one sign; summation stops once a term is below eps/4 of the sum.
template <typename Coefficient>
double positive_series(double q, int first, Coefficient next) {
  double sum = 0.0;
  double qn = std::pow(q, first);
  for (int n = first; n < first + kMaxSeriesTerms; ++n) {
    const double term = next(n) * qn;
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) return sum;
    qn *= q;
  }
  throw ConvergenceError("series: no convergence, q too close to 1");
}

/// Generator of a_n in order n = 0, 1, 2, ...
class KCoefficients {
 public:
  /// Returns a_n for the n passed; must be called with n = 0, 1, 2, ... in turn.
  double operator()(int n) {
    if (n > 0) {
      const double ratio = (2.0 * n - 1.0) / (2.0 * n);
      a_ *= ratio * ratio;
    }
    return a_;
  }

 private:
  double a_ = 1.0;
};

/// E - r'^2 K = (pi/2) sum_{n>=1} a_{n-1}/(2n) q^n.
inline double e_minus_rc2k_series(double q) {
  KCoefficients a;
  a(0);
  double previous = 1.0;
  const double sum = positive_series(q, 1, [&](int n) {
    const double c = previous / (2.0 * n);
    previous = a(n);
    return c;
  });
  return 0.5 * std::numbers::pi * sum;
}

/// K - E = (pi/2) sum_{n>=1} a_n 2n/(2n-1) q^n.
inline double k_minus_e_series(double q) {
  KCoefficients a;
  a(0);
  const double sum = positive_series(q, 1, [&](int n) {
    return a(n) * (2.0 * n) / (2.0 * n - 1.0);
  });
  return 0.5 * std::numbers::pi * sum;
}

}  // namespace psiell::detail
