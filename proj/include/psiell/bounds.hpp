#pragma once

#include <string_view>

namespace psiell {

/// Closed-form bound formulas, named by the expression they evaluate.
enum class BoundFormula {
  pi_r_over_1mr_sq,           ///< pi r / (1-r)^2
  sixteen_r_over_pi_1mr_sq,   ///< 16 r / (pi (1-r)^2)
  four_r_over_pi_1msqrt_sq,   ///< 4 r / (pi (1-sqrt r)^2)
  pi_r_over_1msqrt_sq,        ///< pi r / (1-sqrt r)^2
  modulus_lower,              ///< L(b)
  modulus_upper,              ///< U(b)
  modulus_lower_relaxed,      ///< (2/pi)(1 - (1+sqrt(4b/pi))^-1) log(2(1+sqrt(4b/pi)))
  modulus_upper_relaxed       ///< (2/pi) log(2(1+sqrt(pi b)))
};

std::string_view bound_formula_name(BoundFormula f);

/// Enclosure lower < target < upper together with the formulas that produced each side.
struct BoundPair {
  double lower;
  double upper;
  BoundFormula lower_id;
  BoundFormula upper_id;
};

}  // namespace psiell
