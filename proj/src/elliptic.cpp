#include "psiell/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "elliptic_internal.hpp"
#include "psiell/errors.hpp"
#include "series.hpp"

namespace psiell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxAgmIterations = 64;
constexpr double kSeriesCutoff = 0.5;
constexpr double kTinyModulus = 1e-4;

bool in_closed_unit(double x) { return x >= 0.0 && x <= 1.0; }

void require_interior(const Modulus& m, const char* who) {
  if (!m.is_interior()) throw DomainError(std::string(who) + ": domain is (0,1)");
}

// K and E for r < 1e-4 from the first three Maclaurin terms; the omitted
// q^3 term is below 1e-24 relative.
detail::KE small_modulus_ke(double r) {
  const double q = r * r;
  return {0.5 * kPi * (1.0 + q * (0.25 + q * (9.0 / 64.0))),
          0.5 * kPi * (1.0 - q * (0.25 + q * (3.0 / 64.0)))};
}

}  // namespace

namespace detail {

KE agm_ke(const Modulus& m) {
  if (m.rc() == 0.0) throw DomainError("ellip_k: K(1-) is infinite; domain is [0,1)");
  double a = 1.0;
  double b = m.rc();
  // 1 - sum 2^{n-1} c_n^2 with c_0 = r; the n = 0 term is folded in here.
  double scale = m.r() <= 0.5 ? 1.0 - 0.5 * m.r() * m.r() : 0.5 * (1.0 + m.rc() * m.rc());
  double weight = 0.5;
  for (int n = 0; std::abs(a - b) > 4.0 * kEps * a; ++n) {
    if (n == kMaxAgmIterations) throw ConvergenceError("agm: iteration cap reached");
    const double c = 0.5 * (a - b);
    const double mean = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = mean;
    weight *= 2.0;
    scale -= weight * c * c;
  }
  const double k = 0.5 * kPi / a;
  return {k, k * scale};
}

double e_minus_rc2k(const Modulus& m) {
  if (m.r() <= kSeriesCutoff) return e_minus_rc2k_series(m.r() * m.r());
  const auto [k, e] = agm_ke(m);
  return e - m.rc() * m.rc() * k;
}

double k_minus_e(const Modulus& m) {
  if (m.r() <= kSeriesCutoff) return k_minus_e_series(m.r() * m.r());
  const auto [k, e] = agm_ke(m);
  return k - e;
}

double e_minus_1mr_k(const Modulus& m) {
  const auto [k, e] = agm_ke(m);
  if (m.r() <= kSeriesCutoff) return m.r() * k - k_minus_e_series(m.r() * m.r());
  return e - m.one_minus() * k;
}

double ec_minus_r_kc(const Modulus& m) {
  if (m.r() < kSeriesCutoff) {
    const auto [kc, ec] = agm_ke(m.complementary());
    return ec - m.r() * kc;
  }
  // E'(r) - r K'(r) = (1+r) (E(t) - t'^2 K(t)), t = (1-r)/(1+r), from the
  // descending Landen transformations of K' and E'.
  const double t = m.one_minus() / (1.0 + m.r());
  const double tc = 2.0 * std::sqrt(m.r()) / (1.0 + m.r());
  return (1.0 + m.r()) * e_minus_rc2k(Modulus::with_complement(t, tc));
}

}  // namespace detail

double agm(double a, double b) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("agm: arguments must be positive and finite");
  }
  for (int n = 0; std::abs(a - b) > 4.0 * detail::kEps * a; ++n) {
    if (n == kMaxAgmIterations) throw ConvergenceError("agm: iteration cap reached");
    const double mean = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = mean;
  }
  return a;
}

double ellip_k(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("ellip_k: domain is [0,1); K(1-) is infinite");
  return ellip_k(Modulus(r));
}

double ellip_k(const Modulus& m) {
  if (m.rc() == 0.0) throw DomainError("ellip_k: domain is [0,1); K(1-) is infinite");
  return 0.5 * kPi / agm(1.0, m.rc());
}

double ellip_e(double r) {
  if (!in_closed_unit(r)) throw DomainError("ellip_e: domain is [0,1]");
  return ellip_e(Modulus(r));
}

double ellip_e(const Modulus& m) {
  if (m.rc() == 0.0) return 1.0;
  return detail::agm_ke(m).e;
}

EllipticValues elliptic_values(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("elliptic_values: domain is (0,1)");
  return elliptic_values(Modulus(r));
}

EllipticValues elliptic_values(const Modulus& m) {
  require_interior(m, "elliptic_values");
  if (m.r() < kTinyModulus) {
    const auto [k, e] = small_modulus_ke(m.r());
    const auto [kc, ec] = detail::agm_ke(m.complementary());
    return {k, e, kc, ec, EvalPath::series_small_r};
  }
  if (m.rc() < kTinyModulus) {
    const auto [k, e] = detail::agm_ke(m);
    const auto [kc, ec] = small_modulus_ke(m.rc());
    return {k, e, kc, ec, EvalPath::series_near_one};
  }
  const auto [k, e] = detail::agm_ke(m);
  const auto [kc, ec] = detail::agm_ke(m.complementary());
  return {k, e, kc, ec, EvalPath::agm};
}

double elliptic_combination(Combination kind, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("elliptic_combination: domain is (0,1)");
  return elliptic_combination(kind, Modulus(r));
}

double elliptic_combination(Combination kind, const Modulus& m) {
  require_interior(m, "elliptic_combination");
  switch (kind) {
    case Combination::e_minus_rc2k:
      return detail::e_minus_rc2k(m);
    case Combination::k_minus_e:
      return detail::k_minus_e(m);
    case Combination::e_minus_1mr_k:
      return detail::e_minus_1mr_k(m);
    case Combination::ec_minus_r_kc:
      return detail::ec_minus_r_kc(m);
  }
  throw DomainError("elliptic_combination: unknown combination");
}

double legendre_residual(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("legendre_residual: domain is (0,1)");
  return legendre_residual(Modulus(r));
}

double legendre_residual(const Modulus& m) {
  const auto v = elliptic_values(m);
  return v.e * v.kc + v.ec * v.k - v.k * v.kc - 0.5 * kPi;
}

double series_oracle(Integral which, double r, double tol) {
  if (!(r >= 0.0)) throw DomainError("series_oracle: domain is [0, 0.99]");
  if (!(tol >= 1e-15)) throw DomainError("series_oracle: tol must be >= 1e-15");
  if (r > 0.99) throw ConvergenceError("series_oracle: series is only usable for r <= 0.99");

  using Ext = long double;
  const Ext q = static_cast<Ext>(r) * r;
  const Ext stop = static_cast<Ext>(tol) * (1.0L - q);
  Ext a = 1.0L;
  Ext qn = 1.0L;
  Ext sum = 1.0L;
  for (int n = 1; n < 1'000'000; ++n) {
    const Ext ratio = (2.0L * n - 1.0L) / (2.0L * n);
    a *= ratio * ratio;
    qn *= q;
    const Ext term = which == Integral::K ? a * qn : a * qn / (2.0L * n - 1.0L);
    sum += which == Integral::K ? term : -term;
    if (term < stop) {
      return static_cast<double>(std::numbers::pi_v<long double> / 2.0L * sum);
    }
  }
  throw ConvergenceError("series_oracle: iteration cap reached");
}

}  // namespace psiell
