#include "lemma_functions.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "elliptic_internal.hpp"
#include "psiell/errors.hpp"
#include "psiell/psi.hpp"
#include "series.hpp"

namespace psiell::lemma {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kSeriesCutoff = 0.5;

// x = (1-r')/(1+r') with x' = 2 sqrt(r')/(1+r'), the modulus whose ascending
// Landen image is r.
Modulus landen_preimage(const Modulus& m) { return landen_descending(m.complementary()); }

// 1 - x' = (1 - sqrt r')^2 / (1 + r').
double one_minus_preimage_complement(const Modulus& m) {
  const double d = one_minus_sqrt(m.complementary());
  return d * d / (1.0 + m.rc());
}

}  // namespace

double one_minus_sqrt(const Modulus& m) { return m.one_minus() / (1.0 + std::sqrt(m.r())); }

double f1(const Modulus& m) { return detail::e_minus_1mr_k(m); }

double f2(const Modulus& m) { return detail::e_minus_1mr_k(m) / m.r(); }

double f3(const Modulus& m) { return detail::ec_minus_r_kc(m); }

double f4(const Modulus& m) { return detail::ec_minus_r_kc(m) / m.one_minus(); }

// f5(2 sqrt(x)/(1+x)) = (E(x) - x'^2 K(x)) / (1 - x').
double f5(const Modulus& m) {
  return detail::e_minus_rc2k(landen_preimage(m)) / one_minus_preimage_complement(m);
}

// With X = x^2: 1 - x' = sum beta_n X^n and (2/pi)(E - x'^2 K) = sum a_{n-1}/(2n) X^n
// agree in the X term, so pi/2 - f5 = (pi/2) sum_{n>=2} (beta_n - a_{n-1}/(2n)) X^n / (1 - x').
double f5_deficit(const Modulus& m) {
  if (m.r() > kSeriesCutoff) return kHalfPi - f5(m);
  const double x = landen_preimage(m).r();
  detail::KCoefficients a;
  a(0);
  double beta = 0.5;
  const double excess = detail::positive_series(x * x, 2, [&](int n) {
    beta *= (2.0 * n - 3.0) / (2.0 * n);
    return beta - a(n - 1) / (2.0 * n);
  });
  return kHalfPi * excess / one_minus_preimage_complement(m);
}

// f6 = 2 (E' - r K') - (1 - r)(K' - E').
double f6(const Modulus& m) {
  return 2.0 * detail::ec_minus_r_kc(m) - m.one_minus() * detail::k_minus_e(m.complementary());
}

double f7(const Modulus& m) { return (1.0 + m.r()) * f4(m); }

double f8(const Modulus& m) { return psiell::f8(m); }

double scaled_e_minus_rc2k(const Modulus& m) {
  return detail::e_minus_rc2k(m) / (m.r() * m.r());
}

// (pi/2) sum_{j>=1} a_j / (2j + 2) q^j.
double scaled_e_minus_rc2k_excess(const Modulus& m) {
  if (m.r() > kSeriesCutoff) return scaled_e_minus_rc2k(m) - 0.5 * kHalfPi;
  detail::KCoefficients a;
  a(0);
  return kHalfPi * detail::positive_series(m.r() * m.r(), 1, [&](int j) {
    return a(j) / (2.0 * j + 2.0);
  });
}

double rc_power_k(double c, const Modulus& m) {
  return std::pow(m.rc(), c) * detail::agm_ke(m).k;
}

// (2/pi) r'^c K = sum_n b_n q^n, b_n the Cauchy product of the binomial
// coefficients of (1-q)^{c/2} with a_n. b_0 = 1, so the deficit is -(pi/2) sum_{n>=1} b_n q^n.
double rc_power_k_deficit(double c, const Modulus& m) {
  if (m.r() > kSeriesCutoff) return kHalfPi - rc_power_k(c, m);
  const double q = m.r() * m.r();
  std::vector<double> gamma{1.0};
  std::vector<double> a{1.0};
  detail::KCoefficients next_a;
  next_a(0);
  double sum = 0.0;
  double qn = 1.0;
  for (int n = 1; n < detail::kMaxSeriesTerms; ++n) {
    gamma.push_back(gamma.back() * (n - 1 - 0.5 * c) / n);
    a.push_back(next_a(n));
    double b = 0.0;
    for (int k = 0; k <= n; ++k) b += gamma[k] * a[n - k];
    qn *= q;
    const double term = b * qn;
    sum += term;
    if (n >= 3 && std::abs(term) <= 0.25 * detail::kEps * std::abs(sum)) return -kHalfPi * sum;
  }
  throw ConvergenceError("rc_power_k_deficit: series did not converge");
}

}  // namespace psiell::lemma
