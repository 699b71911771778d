#pragma once

#include "psiell/bounds.hpp"
#include "psiell/modulus.hpp"

namespace psiell {

// psi(r) = 2 (E - (1-r) K) / (E' - r K'), an increasing convex homeomorphism
// of (0,1) onto (0,inf), and Groetzsch's ring modulus mu(r) = (pi/2) K'/K.

enum class PsiPath {
  direct,               ///< 2 f1 / f3 with both combinations evaluated directly
  reciprocal_identity,  ///< 1 / psi(((1-sqrt r)/(1+sqrt r))^2)
  small_r_series        ///< 2 f1 / f3 with the numerator taken from its series
};

enum class PsiRoute { automatic, reciprocal_identity };

struct PsiValue {
  double r;
  double value;
  PsiPath path;
};

/// psi with the evaluation route recorded. The automatic route is accurate on
/// all of (0,1); the reciprocal route is an independent cross-check.
PsiValue psi_evaluate(const Modulus& m, PsiRoute route = PsiRoute::automatic);

double psi(double r);
double psi(const Modulus& m);

/// d psi / dr = (pi / (1 - r^2)) ((1 - r) / (E' - r K'))^2.
double psi_prime(double r);
double psi_prime(const Modulus& m);

/// Inverse of psi on (0,inf). Bracketed from the (1 - sqrt r)^2 psi(r)/r
/// enclosure (4/pi, pi), then Newton with bisection fallback.
Modulus psi_inv(double y);

double mu(double r);
double mu(const Modulus& m);

/// d mu / dr = -pi^2 / (4 r r'^2 K^2).
double mu_prime(double r);
double mu_prime(const Modulus& m);

/// Inverse of mu on (0,inf). For m < pi/2 the complement is solved for via
/// mu(r) mu(r') = pi^2/4, so the result keeps r' accurate near r = 1.
Modulus mu_inv(double m);

/// Relative residuals of psi(r^2) psi(t^2) = 1 and psi(t) psi((1-r')/(1+r')) = 1,
/// t = (1-r)/(1+r).
struct PsiIdentityResiduals {
  double squared;
  double complementary;
};

PsiIdentityResiduals psi_identity_residuals(double r);

/// max{pi r/(1-r)^2, 4r/(pi(1-sqrt r)^2)} < psi(r) < min{16r/(pi(1-r)^2), pi r/(1-sqrt r)^2}.
BoundPair psi_bounds(double r);

/// f8(r) = (E - (1-r) K) / (sqrt(r) (1-r) K), increasing from (0,1) onto (0,inf).
double f8(double r);
double f8(const Modulus& m);

/// The unique r with f8(r) = 1, approximately 0.479047.
Modulus f8_root();

/// Power mean H_p(x, y); p = 0 is the geometric mean, p = +-inf the max / min.
struct PowerMeanSpec {
  double p;
  double x;
  double y;
};

double power_mean(const PowerMeanSpec& spec);
double power_mean(double p, double x, double y);

}  // namespace psiell
