#include "psiell/rectangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "psiell/errors.hpp"
#include "psiell/psi.hpp"
#include "report_builder.hpp"

namespace psiell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStrictMargin = 1e-12;
constexpr double kEqualityResidual = 1e-10;

void require_side(double b, const char* who) {
  if (!(b >= kMinSide && b <= kMaxSide)) {
    throw DomainError(std::string(who) + ": domain is [1e-8, 1e8]");
  }
}

double relative_gap(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

// m(a) = mu(psi^{-1}(a)) / pi, so M(Gamma_b) = m(1/b).
double m_of(double a) { return mu(psi_inv(a)) / kPi; }

// Feeds one inequality lhs <= rhs into the report.
void add_link(detail::ReportBuilder& out, double lhs, double rhs, bool diagonal, GridPoint at) {
  if (diagonal) {
    out.offer_diagonal(relative_gap(lhs, rhs), at, kEqualityResidual);
  } else {
    out.offer(rhs - lhs, at);
  }
}

}  // namespace

RectangleAspect rectangle_aspect(double b) {
  require_side(b, "rectangle_aspect");
  return {b, psi_inv(1.0 / b)};
}

double exterior_modulus(double b) {
  require_side(b, "exterior_modulus");
  return m_of(1.0 / b);
}

double interior_modulus(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("interior_modulus: domain is (0,inf)");
  return b;
}

BoundPair modulus_bounds(double b) {
  require_side(b, "modulus_bounds");
  const double a = 1.0 + std::sqrt(4.0 * b / kPi);
  const double c = 1.0 + std::sqrt(kPi * b);
  // 1 - a^-4 and 1 - c^-4 without cancellation for small b.
  const double one_minus_a4 = -std::expm1(-4.0 * std::log(a));
  const double one_minus_c4 = -std::expm1(-4.0 * std::log(c));
  const double lower = (2.0 / kPi) * std::pow(one_minus_a4, 0.25) * std::log(2.0 * a);
  const double upper = std::log(2.0 * c * c * (1.0 + std::sqrt(one_minus_c4))) / kPi;
  return {lower, upper, BoundFormula::modulus_lower, BoundFormula::modulus_upper};
}

BoundPair modulus_bounds_relaxed(double b) {
  require_side(b, "modulus_bounds_relaxed");
  const double a = 1.0 + std::sqrt(4.0 * b / kPi);
  const double c = 1.0 + std::sqrt(kPi * b);
  const double lower = (2.0 / kPi) * (1.0 - 1.0 / a) * std::log(2.0 * a);
  const double upper = (2.0 / kPi) * std::log(2.0 * c);
  return {lower, upper, BoundFormula::modulus_lower_relaxed, BoundFormula::modulus_upper_relaxed};
}

ModulusResult modulus_result(double b) {
  const BoundPair bounds = modulus_bounds(b);
  return {exterior_modulus(b), interior_modulus(b), bounds.lower, bounds.upper};
}

double comparison_gap(double r) {
  require_side(r, "comparison_gap");
  return m_of(r) - 1.0 / r;
}

double r0_constant() { return psi(f8_root()); }

ReciprocityResiduals reciprocity_residual(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("reciprocity_residual: domain is (0,1)");
  const Modulus m(r);
  const Modulus x = modulus_sqrt(m);
  const Modulus s = modulus_square(landen_descending(x));
  const double psi_product = psi(m) * psi(s);
  const double mu_product = mu(modulus_square(x)) * mu(s) / (kPi * kPi);
  return {std::abs(psi_product - 1.0), std::abs(mu_product - 1.0)};
}

CheckReport modulus_mean_chain_check(double a, double b) {
  require_side(a, "modulus_mean_chain_check");
  require_side(b, "modulus_mean_chain_check");
  const double ma = exterior_modulus(a);
  const double mb = exterior_modulus(b);
  const double harmonic = exterior_modulus(2.0 * a * b / (a + b));
  const double geometric = std::sqrt(ma) * std::sqrt(mb);
  const double arithmetic = 0.5 * (ma + mb);
  const double at_mean = exterior_modulus(0.5 * (a + b));

  detail::ReportBuilder out("sec4-mean-chain", Criterion::margin_above, kStrictMargin);
  const bool diagonal = a == b;
  const GridPoint at{a, b};
  add_link(out, harmonic, geometric, diagonal, at);
  add_link(out, geometric, arithmetic, diagonal, at);
  add_link(out, arithmetic, at_mean, diagonal, at);
  return out.finish();
}

CheckReport modulus_power_mean_check(double a, double b, double p) {
  require_side(a, "modulus_power_mean_check");
  require_side(b, "modulus_power_mean_check");
  if (!(p <= -1.0 || p >= 1.0)) {
    throw DomainError("modulus_power_mean_check: p must satisfy p <= -1 or p >= 1");
  }
  const double of_mean = exterior_modulus(power_mean(p, a, b));
  const double mean_of = power_mean(p, exterior_modulus(a), exterior_modulus(b));

  detail::ReportBuilder out("sec4-power-mean", Criterion::margin_above, kStrictMargin);
  const GridPoint at{a, b};
  if (p <= -1.0) {
    add_link(out, of_mean, mean_of, a == b, at);
  } else {
    add_link(out, mean_of, of_mean, a == b, at);
  }
  return out.finish();
}

}  // namespace psiell
