#include "psiell/landen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elliptic_internal.hpp"
#include "psiell/errors.hpp"
#include "psiell/modulus.hpp"

namespace psiell {

namespace {

Modulus checked(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": domain is (0,1)");
  return Modulus(r);
}

IdentityResidual make_residual(IdentityId id, double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return {id, lhs, rhs, scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale};
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::transfk1: return "transfk1";
    case IdentityId::transfk2: return "transfk2";
    case IdentityId::transfe1: return "transfe1";
    case IdentityId::transfe2: return "transfe2";
    case IdentityId::mytransfk: return "mytransfk";
    case IdentityId::mytransfkk: return "mytransfkk";
    case IdentityId::mytransfe: return "mytransfe";
    case IdentityId::mytransfee: return "mytransfee";
  }
  return "unknown";
}

std::array<IdentityResidual, 4> landen_residuals(double r) {
  const Modulus m = checked(r, "landen_residuals");
  const auto [k, e] = detail::agm_ke(m);
  const auto [kc, ec] = detail::agm_ke(m.complementary());
  const auto up = detail::agm_ke(landen_ascending(m));
  const auto down = detail::agm_ke(landen_descending(m));
  const double rc2 = m.rc() * m.rc();
  return {make_residual(IdentityId::transfk1, up.k, (1.0 + r) * k),
          make_residual(IdentityId::transfk2, down.k, 0.5 * (1.0 + r) * kc),
          make_residual(IdentityId::transfe1, up.e, (2.0 * e - rc2 * k) / (1.0 + r)),
          make_residual(IdentityId::transfe2, down.e, (ec + r * kc) / (1.0 + r))};
}

std::array<IdentityResidual, 4> quadratic_residuals(double r) {
  const Modulus m = checked(r, "quadratic_residuals");
  const Modulus t2 = modulus_square(landen_descending(m));
  const Modulus r2 = modulus_square(m);
  const auto lhs = detail::agm_ke(t2);
  const auto lhs_c = detail::agm_ke(t2.complementary());
  const auto [k, e] = detail::agm_ke(r2);
  const auto [kc, ec] = detail::agm_ke(r2.complementary());
  const double onep2 = (1.0 + r) * (1.0 + r);
  const double q = r * r;
  return {make_residual(IdentityId::mytransfk, lhs.k, 0.25 * onep2 * kc),
          make_residual(IdentityId::mytransfkk, lhs_c.k, onep2 * k),
          make_residual(IdentityId::mytransfe, lhs.e, (ec + (r + q + q * r) * kc) / onep2),
          make_residual(IdentityId::mytransfee, lhs_c.e,
                        (4.0 * e - (3.0 - 2.0 * q - q * q) * k) / onep2)};
}

double landen_chain_residual(double r) {
  const Modulus m = checked(r, "landen_chain_residual");
  const Modulus r2 = modulus_square(m);
  const Modulus t2 = modulus_square(landen_descending(m));
  // s = (1-r^2)/(1+r^2) is both the descending image of r^2 and the ascending image of t^2.
  const Modulus s = landen_descending(r2);
  const double q = r * r;
  const double k_s = detail::agm_ke(s).k;
  const double via_t = 2.0 * (1.0 + q) / ((1.0 + r) * (1.0 + r)) * detail::agm_ke(t2).k;
  const double via_r2 = 0.5 * (1.0 + q) * detail::agm_ke(r2.complementary()).k;
  return std::max(relative_gap(via_t, k_s), relative_gap(k_s, via_r2));
}

}  // namespace psiell
