#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "psiell/errors.hpp"
#include "psiell/psi.hpp"

using namespace psiell;

namespace {

struct Reference {
  double r, psi, mu;
};
// 30-digit evaluation, frozen.
constexpr Reference kReference[] = {
    {1e-6, 3.1416388413519504216e-6, 15.201804919083914723},
    {0.1, 0.46282190157910806704, 3.6863692375528519404},
    {0.3, 2.6558843622797813605, 2.5668979448308223198},
    {0.5, 9.4065584318614082491, 2.0094593770052851728},
    {0.7, 38.422720004745818456, 1.585219073702891218},
    {0.9, 456.40514577906224877, 1.1396666442344295261},
    {0.99, 50416.829382821822661, 0.73878787143360219916},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("psi and mu match reference values") {
  for (const auto& ref : kReference) {
    CAPTURE(ref.r);
    CHECK(rel(psi(ref.r), ref.psi) <= 1e-13);
    CHECK(rel(mu(ref.r), ref.mu) <= 1e-14);
  }
  // Reference taken at the double nearest 1 - 1e-6, which psi amplifies.
  CHECK(rel(psi(1.0 - 1e-6), 5092953085680.2458911) <= 1e-13);
}

TEST_CASE("psi(3 - 2 sqrt 2) = 1") {
  CHECK(std::abs(psi(3.0 - 2.0 * std::numbers::sqrt2) - 1.0) <= 1e-14);
}

TEST_CASE("evaluation paths agree") {
  for (double r : {0.05, 0.3, 0.6, 0.95}) {
    const Modulus m(r);
    const PsiValue a = psi_evaluate(m);
    const PsiValue b = psi_evaluate(m, PsiRoute::reciprocal_identity);
    CHECK(b.path == PsiPath::reciprocal_identity);
    CHECK(rel(a.value, b.value) <= 1e-13);
  }
  CHECK(psi_evaluate(Modulus(0.2)).path == PsiPath::small_r_series);
  CHECK(psi_evaluate(Modulus(0.8)).path == PsiPath::direct);
}

TEST_CASE("domain errors name the domain") {
  for (double r : {0.0, 1.0, 1.5, -1.0, std::numeric_limits<double>::quiet_NaN()}) {
    CHECK_THROWS_WITH_AS(psi(r), doctest::Contains("domain is (0,1)"), DomainError);
    CHECK_THROWS_AS(mu(r), DomainError);
  }
  CHECK_THROWS_AS(psi_inv(0.0), DomainError);
  CHECK_THROWS_AS(mu_inv(-1.0), DomainError);
}

TEST_CASE("derivatives") {
  CHECK(rel(psi_prime(0.3), 17.815288124084328868) <= 1e-13);
  CHECK(rel(mu_prime(0.3), -3.4952541151020347866) <= 1e-13);
}

TEST_CASE("inverses") {
  CHECK(psi_inv(1.0).r() == doctest::Approx(3.0 - 2.0 * std::numbers::sqrt2).epsilon(1e-14));
  CHECK(mu_inv(std::numbers::pi / 2).r() == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
  for (double y : {1e-6, 0.01, 1.0, 100.0, 1e6}) {
    CHECK(rel(psi(psi_inv(y)), y) <= 1e-12);
  }
  for (double m : {0.01, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    CHECK(rel(mu(mu_inv(m)), m) <= 1e-12);
  }
  // Small mu means r near 1; the complement must survive.
  CHECK(mu_inv(0.01).rc() > 0.0);
}

TEST_CASE("bounds enclose psi") {
  for (double r = 0.01; r < 1.0; r += 0.01) {
    const BoundPair b = psi_bounds(r);
    CHECK(b.lower < psi(r));
    CHECK(psi(r) < b.upper);
  }
  CHECK(bound_formula_name(psi_bounds(0.01).lower_id) == "pi*r/(1-r)^2");
}

TEST_CASE("f8 and its root") {
  CHECK(f8(0.1) < 1.0);
  CHECK(f8(0.9) > 1.0);
  const Modulus root = f8_root();
  CHECK(root.r() == doctest::Approx(0.479047267131072259).epsilon(1e-14));
  CHECK(psi(root) == doctest::Approx(8.24638638403878227).epsilon(1e-13));
}

TEST_CASE("power mean") {
  CHECK(power_mean(1.0, 2.0, 4.0) == 3.0);
  CHECK(power_mean(-1.0, 2.0, 4.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(power_mean(0.0, 2.0, 8.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(power_mean(2.0, 3.0, 3.0) == 3.0);
  CHECK(power_mean(std::numeric_limits<double>::infinity(), 2.0, 5.0) == 5.0);
  CHECK(power_mean(-std::numeric_limits<double>::infinity(), 2.0, 5.0) == 2.0);
  CHECK_THROWS_AS(power_mean(1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("identities of psi") {
  for (double r : {1e-4, 0.2, 0.5, 0.9, 0.9999}) {
    const PsiIdentityResiduals res = psi_identity_residuals(r);
    CHECK(res.squared <= 1e-13);
    CHECK(res.complementary <= 1e-13);
  }
}
