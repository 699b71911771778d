#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "psiell/elliptic.hpp"
#include "psiell/landen.hpp"

using namespace psiell;

TEST_CASE("modulus transforms keep r^2 + r'^2 = 1") {
  for (double r : {1e-8, 0.2, 0.5, 0.9, 1.0 - 1e-9}) {
    const Modulus m(r);
    for (const Modulus& t : {landen_ascending(m), landen_descending(m), modulus_square(m), modulus_sqrt(m)}) {
      CHECK(std::abs(t.r() * t.r() + t.rc() * t.rc() - 1.0) <= 4e-16);
    }
  }
}

TEST_CASE("descending transform keeps the tiny complement") {
  // (1-r)/(1+r) at r = 1 - 1e-12 has complement 2 sqrt(r)/(1+r), close to 1,
  // and the modulus itself is 5e-13, which subtraction would smear.
  const Modulus m = Modulus::from_complement(std::sqrt(2e-12));
  CHECK(landen_descending(m).r() == doctest::Approx(5e-13).epsilon(1e-6));
}

TEST_CASE("Landen identities") {
  for (double r : {1e-3, 0.1, 0.5, 0.8, 0.999}) {
    CAPTURE(r);
    for (const auto& id : landen_residuals(r)) CHECK(id.residual <= 1e-13);
    for (const auto& id : quadratic_residuals(r)) CHECK(id.residual <= 1e-13);
    CHECK(landen_chain_residual(r) <= 1e-13);
  }
}

TEST_CASE("identity names") {
  CHECK(identity_name(IdentityId::transfk1) == "transfk1");
  CHECK(identity_name(IdentityId::mytransfee) == "mytransfee");
}

TEST_CASE("ascending transform doubles K") {
  // K(2 sqrt(r)/(1+r)) = (1+r) K(r).
  const double r = 0.3;
  CHECK(ellip_k(landen_ascending(Modulus(r))) == doctest::Approx(1.3 * 1.6080486199305128013).epsilon(1e-14));
}
