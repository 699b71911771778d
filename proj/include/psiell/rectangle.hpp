#pragma once

#include "psiell/bounds.hpp"
#include "psiell/modulus.hpp"
#include "psiell/report.hpp"

namespace psiell {

// Moduli of the rectangle R = [0,1] x [0,b]. Gamma_b joins the sides of
// length b through the exterior of R, Delta_b through its interior.
//
// Side lengths and comparison arguments are accepted on [1e-8, 1e8]; outside
// that range the functions throw DomainError instead of losing accuracy.

inline constexpr double kMinSide = 1e-8;
inline constexpr double kMaxSide = 1e8;

/// Aspect b together with the modulus r = psi^{-1}(1/b).
struct RectangleAspect {
  double b;
  Modulus r;
};

RectangleAspect rectangle_aspect(double b);

/// M(Gamma_b) = mu(psi^{-1}(1/b)) / pi.
double exterior_modulus(double b);

/// M(Delta_b) = b.
double interior_modulus(double b);

/// L(b) < M(Gamma_b) < U(b).
BoundPair modulus_bounds(double b);

/// The one-line relaxations L(b) > (2/pi)(1 - (1+sqrt(4b/pi))^-1) log(2(1+sqrt(4b/pi)))
/// and U(b) < (2/pi) log(2(1+sqrt(pi b))).
BoundPair modulus_bounds_relaxed(double b);

struct ModulusResult {
  double exterior;
  double interior;
  double lower;
  double upper;
};

ModulusResult modulus_result(double b);

/// f(r) = mu(psi^{-1}(r)) / pi - 1/r. Negative on (0,1), zero at 1, positive
/// beyond, increasing up to r0 and decreasing after it.
double comparison_gap(double r);

/// r0 = psi(f8_root()) = 8.24639..., the maximiser of comparison_gap.
double r0_constant();

/// With s = ((1-sqrt r)/(1+sqrt r))^2 and x = sqrt(r):
/// psi_product = |psi(r) psi(s) - 1|, mu_product = |mu(x^2) mu(((1-x)/(1+x))^2) / pi^2 - 1|.
struct ReciprocityResiduals {
  double psi_product;
  double mu_product;
};

ReciprocityResiduals reciprocity_residual(double r);

/// M(Gamma_{2ab/(a+b)}) <= sqrt(M_a M_b) <= (M_a + M_b)/2 <= M(Gamma_{(a+b)/2}).
/// Off the diagonal every link needs a margin above 1e-12; at a == b every
/// link must close to 1e-10 relative.
CheckReport modulus_mean_chain_check(double a, double b);

/// M(Gamma_{H_p(a,b)}) <= H_p(M_a, M_b) for p <= -1, >= for p >= 1.
/// Throws DomainError for -1 < p < 1.
CheckReport modulus_power_mean_check(double a, double b, double p);

}  // namespace psiell
