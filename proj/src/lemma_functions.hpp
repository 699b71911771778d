#pragma once

// Auxiliary functions whose monotonicity, convexity and limits the verify
// suite checks. Functions that approach a constant with a high-order
// contact are also given as deficits (constant minus function), summed from
// their series near r = 0, so that grid differences stay resolvable.

#include "psiell/modulus.hpp"

namespace psiell::lemma {

double f1(const Modulus& m);  ///< E - (1-r) K
double f2(const Modulus& m);  ///< (E - (1-r) K) / r
double f3(const Modulus& m);  ///< E' - r K'
double f4(const Modulus& m);  ///< (E' - r K') / (1-r)
double f5(const Modulus& m);  ///< (E - r' K) / (1 - sqrt r')^2
double f6(const Modulus& m);  ///< (3-r) E' - (1+r) K'
double f7(const Modulus& m);  ///< (1+r)(E' - r K') / (1-r)
double f8(const Modulus& m);  ///< (E - (1-r) K) / (sqrt(r) (1-r) K)

/// pi/2 - f5(r); f5 -> pi/2 like r^8.
double f5_deficit(const Modulus& m);

/// r^-2 (E - r'^2 K).
double scaled_e_minus_rc2k(const Modulus& m);

/// r^-2 (E - r'^2 K) - pi/4.
double scaled_e_minus_rc2k_excess(const Modulus& m);

/// r'^c K.
double rc_power_k(double c, const Modulus& m);

/// pi/2 - r'^c K; for c = 1/2 this vanishes like r^4.
double rc_power_k_deficit(double c, const Modulus& m);

/// 1 - sqrt(r), accurate near r = 1.
double one_minus_sqrt(const Modulus& m);

}  // namespace psiell::lemma
