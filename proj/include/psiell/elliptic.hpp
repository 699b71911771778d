#pragma once

#include "psiell/modulus.hpp"

namespace psiell {

/// Arithmetic-geometric mean of a, b > 0. Throws DomainError otherwise.
double agm(double a, double b);

/// Complete elliptic integral of the first kind, K(r) = pi / (2 agm(1, r')).
/// Defined on [0,1); r = 1 is the logarithmic singularity and throws DomainError.
double ellip_k(double r);
double ellip_k(const Modulus& m);

/// Complete elliptic integral of the second kind on [0,1], E(1) = 1.
double ellip_e(double r);
double ellip_e(const Modulus& m);

enum class EvalPath {
  agm,             ///< all four values from the AGM
  series_small_r,  ///< K, E from a truncated Maclaurin series (r < 1e-4)
  series_near_one  ///< K', E' from a truncated Maclaurin series (r' < 1e-4)
};

/// K, E, K' = K(r'), E' = E(r') at one interior modulus.
struct EllipticValues {
  double k;
  double e;
  double kc;
  double ec;
  EvalPath path;
};

EllipticValues elliptic_values(double r);
EllipticValues elliptic_values(const Modulus& m);

/// Linear combinations of K and E that vanish (or nearly so) at an endpoint.
enum class Combination {
  e_minus_rc2k,   ///< E - r'^2 K      ~ (pi/4) r^2 as r -> 0
  k_minus_e,      ///< K - E           ~ (pi/4) r^2 as r -> 0
  e_minus_1mr_k,  ///< E - (1 - r) K   ~ (pi/2) r   as r -> 0
  ec_minus_r_kc   ///< E' - r K'       ~ (pi/8)(1-r)^2 as r -> 1
};

/// Evaluates a combination to full relative accuracy on (0,1), switching to
/// series (or a Landen rewrite) where the naive difference cancels.
double elliptic_combination(Combination kind, double r);
double elliptic_combination(Combination kind, const Modulus& m);

/// E K' + E' K - K K' - pi/2.
double legendre_residual(double r);
double legendre_residual(const Modulus& m);

enum class Integral { K, E };

/// Independent reference: sums the hypergeometric Maclaurin series of K or E
/// in extended precision until the term drops below tol. Valid for r in
/// [0, 0.99]; throws ConvergenceError beyond that and DomainError for tol < 1e-15.
double series_oracle(Integral which, double r, double tol = 1e-15);

}  // namespace psiell
