#include "psiell/psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "elliptic_internal.hpp"
#include "psiell/elliptic.hpp"
#include "psiell/errors.hpp"
#include "root_finding.hpp"

namespace psiell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxNewtonIterations = 100;

Modulus interior(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": domain is (0,1)");
  return Modulus(r);
}

void require_interior(const Modulus& m, const char* who) {
  if (!m.is_interior()) throw DomainError(std::string(who) + ": domain is (0,1)");
}

double psi_ratio(const Modulus& m) {
  return 2.0 * detail::e_minus_1mr_k(m) / detail::ec_minus_r_kc(m);
}

// 1 - sqrt(r) without cancellation near r = 1.
double one_minus_sqrt(const Modulus& m) { return m.one_minus() / (1.0 + std::sqrt(m.r())); }

double f8_derivative(const Modulus& m) {
  const auto [k, e] = detail::agm_ke(m);
  const double r = m.r();
  const double omr = m.one_minus();
  const double numerator = ((1.0 + r) * k - e) * (2.0 * e - m.rc() * m.rc() * k);
  return numerator / (2.0 * r * std::sqrt(r) * (1.0 + r) * omr * omr * k * k);
}

// Root of mu(r) = target for target >= pi/2, so r <= 1/sqrt(2). Solved in
// u = log r, where mu is nearly linear (mu(r) ~ log(4/r)).
double mu_inv_small(double target) {
  const auto g = [target](double u) { return mu(Modulus(std::exp(u))) - target; };
  const auto dg = [](double u) {
    const double r = std::exp(u);
    return mu_prime(Modulus(r)) * r;
  };
  // mu(r) < log(4/r) puts the root below 4 e^{-target}.
  const double hi = std::min(std::log(4.0) - target, std::log(std::sqrt(0.5))) + 1e-6;
  double lo = hi - 1.0;
  while (g(lo) < 0.0) lo -= 1.0;
  return std::exp(detail::bracketed_newton(g, dg, lo, hi, hi, kMaxNewtonIterations, "mu_inv"));
}

}  // namespace

PsiValue psi_evaluate(const Modulus& m, PsiRoute route) {
  require_interior(m, "psi");
  if (route == PsiRoute::reciprocal_identity) {
    const Modulus partner = modulus_square(landen_descending(modulus_sqrt(m)));
    return {m.r(), 1.0 / psi_ratio(partner), PsiPath::reciprocal_identity};
  }
  const PsiPath path = m.r() <= 0.5 ? PsiPath::small_r_series : PsiPath::direct;
  return {m.r(), psi_ratio(m), path};
}

double psi(double r) { return psi_ratio(interior(r, "psi")); }

double psi(const Modulus& m) {
  require_interior(m, "psi");
  return psi_ratio(m);
}

double psi_prime(double r) { return psi_prime(interior(r, "psi_prime")); }

double psi_prime(const Modulus& m) {
  require_interior(m, "psi_prime");
  const double f3 = detail::ec_minus_r_kc(m);
  return kPi * m.one_minus() / ((1.0 + m.r()) * f3 * f3);
}

Modulus psi_inv(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("psi_inv: domain is (0,inf)");
  const auto g = [y](double r) { return psi(Modulus(r)) - y; };
  const auto dg = [](double r) { return psi_prime(Modulus(r)); };

  // 4/pi < (1 - sqrt r)^2 psi(r) / r < pi, solved for r at psi(r) = y.
  const double sy = std::sqrt(y);
  const double top = std::nextafter(1.0, 0.0);
  double lo = std::max(std::pow(sy / (std::sqrt(kPi) + sy), 2), std::numeric_limits<double>::min());
  double hi = std::min(std::pow(sy / (std::sqrt(4.0 / kPi) + sy), 2), top);
  while (g(lo) > 0.0) lo *= 0.5;
  while (hi < top && g(hi) < 0.0) hi = 0.5 * (hi + 1.0);
  if (g(hi) <= 0.0) return Modulus(hi);

  // psi is convex and increasing, so Newton from the right end is monotone.
  return Modulus(detail::bracketed_newton(g, dg, lo, hi, hi, kMaxNewtonIterations, "psi_inv"));
}

double mu(double r) { return mu(interior(r, "mu")); }

double mu(const Modulus& m) {
  require_interior(m, "mu");
  return 0.5 * kPi * agm(1.0, m.rc()) / agm(1.0, m.r());
}

double mu_prime(double r) { return mu_prime(interior(r, "mu_prime")); }

double mu_prime(const Modulus& m) {
  require_interior(m, "mu_prime");
  const double k = detail::agm_ke(m).k;
  return -kPi * kPi / (4.0 * m.r() * m.rc() * m.rc() * k * k);
}

Modulus mu_inv(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mu_inv: domain is (0,inf)");
  if (m >= 0.5 * kPi) {
    if (std::log(4.0) - m < std::log(std::numeric_limits<double>::min())) {
      throw DomainError("mu_inv: preimage underflows double precision");
    }
    return Modulus(mu_inv_small(m));
  }
  // mu(r) mu(r') = pi^2 / 4.
  const double partner = 0.25 * kPi * kPi / m;
  if (std::log(4.0) - partner < std::log(std::numeric_limits<double>::min())) {
    throw DomainError("mu_inv: preimage is 1 to within double precision");
  }
  return Modulus::from_complement(mu_inv_small(partner));
}

PsiIdentityResiduals psi_identity_residuals(double r) {
  const Modulus m = interior(r, "psi_identity_residuals");
  const Modulus t = landen_descending(m);
  const double squared = psi(modulus_square(m)) * psi(modulus_square(t));
  const double complementary = psi(t) * psi(landen_descending(m.complementary()));
  return {std::abs(squared - 1.0), std::abs(complementary - 1.0)};
}

BoundPair psi_bounds(double r) {
  const Modulus m = interior(r, "psi_bounds");
  const double omr = m.one_minus();
  const double oms = one_minus_sqrt(m);
  const double adv_lower = kPi * r / (omr * omr);
  const double adv_upper = 16.0 * r / (kPi * omr * omr);
  const double sqrt_lower = 4.0 * r / (kPi * oms * oms);
  const double sqrt_upper = kPi * r / (oms * oms);
  BoundPair out{};
  if (adv_lower >= sqrt_lower) {
    out.lower = adv_lower;
    out.lower_id = BoundFormula::pi_r_over_1mr_sq;
  } else {
    out.lower = sqrt_lower;
    out.lower_id = BoundFormula::four_r_over_pi_1msqrt_sq;
  }
  if (adv_upper <= sqrt_upper) {
    out.upper = adv_upper;
    out.upper_id = BoundFormula::sixteen_r_over_pi_1mr_sq;
  } else {
    out.upper = sqrt_upper;
    out.upper_id = BoundFormula::pi_r_over_1msqrt_sq;
  }
  return out;
}

double f8(double r) { return f8(interior(r, "f8")); }

double f8(const Modulus& m) {
  require_interior(m, "f8");
  const double k = detail::agm_ke(m).k;
  return detail::e_minus_1mr_k(m) / (std::sqrt(m.r()) * m.one_minus() * k);
}

Modulus f8_root() {
  const auto g = [](double r) { return f8(Modulus(r)) - 1.0; };
  const auto dg = [](double r) { return f8_derivative(Modulus(r)); };
  return Modulus(detail::bracketed_newton(g, dg, 0.1, 0.9, 0.5, kMaxNewtonIterations, "f8_root"));
}

double power_mean(const PowerMeanSpec& spec) { return power_mean(spec.p, spec.x, spec.y); }

double power_mean(double p, double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("power_mean: x and y must be positive");
  if (std::isnan(p)) throw DomainError("power_mean: p is NaN");
  if (p == 0.0) return std::sqrt(x) * std::sqrt(y);
  if (std::isinf(p)) return p > 0.0 ? std::max(x, y) : std::min(x, y);
  // Factor out the side whose ratio power stays <= 1.
  const double base = p > 0.0 ? std::max(x, y) : std::min(x, y);
  const double other = p > 0.0 ? std::min(x, y) : std::max(x, y);
  const double mean = 0.5 * (1.0 + std::pow(other / base, p));
  return base * std::pow(mean, 1.0 / p);
}

std::string_view bound_formula_name(BoundFormula f) {
  switch (f) {
    case BoundFormula::pi_r_over_1mr_sq: return "pi*r/(1-r)^2";
    case BoundFormula::sixteen_r_over_pi_1mr_sq: return "16r/(pi(1-r)^2)";
    case BoundFormula::four_r_over_pi_1msqrt_sq: return "4r/(pi(1-sqrt(r))^2)";
    case BoundFormula::pi_r_over_1msqrt_sq: return "pi*r/(1-sqrt(r))^2";
    case BoundFormula::modulus_lower: return "L(b)";
    case BoundFormula::modulus_upper: return "U(b)";
    case BoundFormula::modulus_lower_relaxed: return "L_relaxed(b)";
    case BoundFormula::modulus_upper_relaxed: return "U_relaxed(b)";
  }
  return "unknown";
}

}  // namespace psiell
