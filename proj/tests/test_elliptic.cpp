#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "psiell/elliptic.hpp"
#include "psiell/errors.hpp"

using namespace psiell;

namespace {

// Reference values from a 30-digit evaluation, frozen.
struct Reference {
  double r, k, e;
};
constexpr Reference kReference[] = {
    {0.1, 1.5747455615173559527, 1.5668619420216682912},
    {0.3, 1.6080486199305128013, 1.5348334649232490416},
    {0.5, 1.6857503548125960429, 1.4674622093394271555},
    {0.7, 1.8456939983747235176, 1.3556611355719554643},
    {0.9, 2.2805491384227702046, 1.1716970527816141412},
    {0.99, 3.356600523361192376, 1.028475809028804001},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Composite Simpson on [0, pi/2]; independent of the AGM and the series.
template <class F>
double simpson(F f, int n = 4000) {
  const double h = 0.5 * std::numbers::pi / n;
  double s = f(0.0) + f(0.5 * std::numbers::pi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("K and E match reference values") {
  for (const auto& ref : kReference) {
    CAPTURE(ref.r);
    CHECK(rel(ellip_k(ref.r), ref.k) <= 1e-14);
    CHECK(rel(ellip_e(ref.r), ref.e) <= 1e-14);
  }
}

TEST_CASE("K and E match quadrature of the integrand") {
  for (double r : {0.2, 0.6, 0.8}) {
    const double k = simpson([r](double t) { return 1.0 / std::sqrt(1.0 - r * r * std::sin(t) * std::sin(t)); });
    const double e = simpson([r](double t) { return std::sqrt(1.0 - r * r * std::sin(t) * std::sin(t)); });
    CHECK(rel(ellip_k(r), k) <= 1e-12);
    CHECK(rel(ellip_e(r), e) <= 1e-12);
  }
}

TEST_CASE("endpoint values") {
  CHECK(ellip_k(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  CHECK(ellip_e(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  CHECK(ellip_e(1.0) == 1.0);
  CHECK_THROWS_AS(ellip_k(1.0), DomainError);
  CHECK_THROWS_AS(ellip_k(-0.1), DomainError);
  CHECK_THROWS_AS(ellip_e(1.5), DomainError);
}

TEST_CASE("agm") {
  CHECK(agm(1.0, 1.0 / std::numbers::sqrt2) == doctest::Approx(0.84721308479397909).epsilon(1e-15));
  CHECK(agm(2.0, 2.0) == 2.0);
  CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
}

TEST_CASE("complementary values carry the complement") {
  const EllipticValues v = elliptic_values(0.5);
  CHECK(rel(v.kc, 2.1565156474996432) <= 1e-14);
  CHECK(rel(v.ec, 1.2110560275684595) <= 1e-14);
  // r' = 1e-9 is lost if formed from r.
  const Modulus m = Modulus::from_complement(1e-9);
  CHECK(elliptic_values(m).kc == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("Legendre relation") {
  for (double r : {1e-6, 0.01, 0.3, 0.5, 0.9, 1.0 - 1e-6}) {
    CAPTURE(r);
    CHECK(std::abs(legendre_residual(r)) <= 1e-13);
  }
}

TEST_CASE("combinations keep relative accuracy") {
  // E - r'^2 K ~ (pi/4) r^2 and E' - r K' ~ (pi/8)(1-r)^2.
  CHECK(rel(elliptic_combination(Combination::e_minus_rc2k, 1e-5), std::numbers::pi / 4 * 1e-10) <= 1e-9);
  CHECK(rel(elliptic_combination(Combination::ec_minus_r_kc, 1.0 - 1e-5), std::numbers::pi / 8 * 1e-10) <= 1e-4);
  CHECK(elliptic_combination(Combination::e_minus_1mr_k, 1e-8) > 0.0);
}

TEST_CASE("series oracle") {
  for (double r = 0.05; r < 0.96; r += 0.05) {
    CAPTURE(r);
    CHECK(rel(series_oracle(Integral::K, r), ellip_k(r)) <= 5e-13);
    CHECK(rel(series_oracle(Integral::E, r), ellip_e(r)) <= 5e-13);
  }
  CHECK_THROWS_AS(series_oracle(Integral::K, 0.995), ConvergenceError);
  CHECK_THROWS_AS(series_oracle(Integral::K, 0.5, 1e-16), DomainError);
}
