#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "psiell/errors.hpp"
#include "psiell/psi.hpp"
#include "psiell/rectangle.hpp"

using namespace psiell;

TEST_CASE("exterior modulus reference values") {
  CHECK(exterior_modulus(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(exterior_modulus(0.25) == doctest::Approx(0.75269417699124174578).epsilon(1e-13));
  CHECK(exterior_modulus(4.0) == doctest::Approx(1.328560829309611988).epsilon(1e-13));
  CHECK(exterior_modulus(100.0) == doctest::Approx(2.2781958830705990189).epsilon(1e-13));
}

TEST_CASE("bounds at b = 1") {
  const BoundPair b = modulus_bounds(1.0);
  CHECK(b.lower == doctest::Approx(0.91070317134).epsilon(1e-10));
  CHECK(b.upper == doctest::Approx(1.08909773770).epsilon(1e-10));
  const BoundPair relaxed = modulus_bounds_relaxed(1.0);
  CHECK(relaxed.lower < b.lower);
  CHECK(relaxed.upper > b.upper);
}

TEST_CASE("modulus result") {
  const ModulusResult m = modulus_result(0.25);
  CHECK(m.interior == 0.25);
  CHECK(m.exterior > m.interior);
  CHECK(m.lower < m.exterior);
  CHECK(m.exterior < m.upper);
  CHECK(modulus_result(100.0).exterior < 100.0);
}

TEST_CASE("side domain") {
  CHECK_THROWS_AS(exterior_modulus(0.0), DomainError);
  CHECK_THROWS_AS(exterior_modulus(1e9), DomainError);
  CHECK_THROWS_AS(interior_modulus(-1.0), DomainError);
  CHECK_NOTHROW(exterior_modulus(1e-8));
  CHECK_NOTHROW(exterior_modulus(1e8));
}

TEST_CASE("comparison gap") {
  CHECK(std::abs(comparison_gap(1.0)) <= 1e-14);
  CHECK(comparison_gap(0.5) < 0.0);
  CHECK(comparison_gap(2.0) > 0.0);
  const double r0 = r0_constant();
  CHECK(r0 == doctest::Approx(8.24638638403878227).epsilon(1e-13));
  CHECK(comparison_gap(r0) > comparison_gap(r0 - 0.01));
  CHECK(comparison_gap(r0) > comparison_gap(r0 + 0.01));
}

TEST_CASE("reciprocity") {
  for (double r : {0.01, 0.3, 0.7, 0.99}) {
    const ReciprocityResiduals res = reciprocity_residual(r);
    CHECK(res.psi_product <= 1e-13);
    CHECK(res.mu_product <= 1e-13);
  }
}

TEST_CASE("mean chain and power means") {
  CHECK(passed(modulus_mean_chain_check(0.3, 7.0)));
  CHECK(passed(modulus_mean_chain_check(2.0, 2.0)));
  for (double p : {-2.0, -1.0, 1.0, 2.0}) {
    CHECK(passed(modulus_power_mean_check(0.5, 3.0, p)));
    CHECK(passed(modulus_power_mean_check(3.0, 3.0, p)));
  }
  CHECK_THROWS_AS(modulus_power_mean_check(1.0, 2.0, 0.5), DomainError);
  const CheckReport diag = modulus_mean_chain_check(2.0, 2.0);
  REQUIRE(diag.diagonal_residual.has_value());
  CHECK(*diag.diagonal_residual <= 1e-10);
}
