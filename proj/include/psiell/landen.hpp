#pragma once

#include <array>
#include <string_view>

namespace psiell {

enum class IdentityId {
  transfk1,    ///< K(2sqrt(r)/(1+r)) = (1+r) K(r)
  transfk2,    ///< K((1-r)/(1+r)) = (1+r) K'(r) / 2
  transfe1,    ///< E(2sqrt(r)/(1+r)) = (2E(r) - r'^2 K(r)) / (1+r)
  transfe2,    ///< E((1-r)/(1+r)) = (E'(r) + r K'(r)) / (1+r)
  mytransfk,   ///< K(t^2) = (1+r)^2 K'(r^2) / 4,          t = (1-r)/(1+r)
  mytransfkk,  ///< K'(t^2) = (1+r)^2 K(r^2)
  mytransfe,   ///< E(t^2) = (E'(r^2) + (r+r^2+r^3) K'(r^2)) / (1+r)^2
  mytransfee   ///< E'(t^2) = (4E(r^2) - (3-2r^2-r^4) K(r^2)) / (1+r)^2
};

std::string_view identity_name(IdentityId id);

/// Both sides of one identity and |lhs - rhs| / max(|lhs|, |rhs|).
struct IdentityResidual {
  IdentityId identity_id;
  double lhs;
  double rhs;
  double residual;
};

/// The four Landen transformations at r in (0,1).
std::array<IdentityResidual, 4> landen_residuals(double r);

/// The four quadratic transformations in t = (1-r)/(1+r) at r in (0,1).
std::array<IdentityResidual, 4> quadratic_residuals(double r);

/// Relative residual of K(t^2) = (1+r)^2 K'(r^2) / 4 obtained by chaining
/// the two Landen transformations of K through s = (1-r^2)/(1+r^2):
/// (2(1+r^2)/(1+r)^2) K(t^2) = K(s) = (1+r^2) K'(r^2) / 2.
/// Returns the worse of the two links.
double landen_chain_residual(double r);

}  // namespace psiell
