#include "psiell/modulus.hpp"

#include <cmath>

#include "psiell/errors.hpp"

namespace psiell {

namespace {

bool in_closed_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

Modulus::Modulus(double r) : r_(r), rc_(0.0) {
  if (!in_closed_unit(r)) throw DomainError("modulus: domain is [0,1]");
  rc_ = std::sqrt((1.0 - r) * (1.0 + r));
}

Modulus Modulus::from_complement(double rc) {
  return Modulus(rc).complementary();
}

Modulus Modulus::with_complement(double r, double rc) {
  if (!in_closed_unit(r) || !in_closed_unit(rc)) {
    throw DomainError("modulus: r and r' must lie in [0,1]");
  }
  if (std::abs(r * r + rc * rc - 1.0) > 1e-14) {
    throw DomainError("modulus: r^2 + r'^2 must equal 1");
  }
  return Modulus(r, rc, Tag{});
}

Modulus landen_ascending(const Modulus& m) {
  const double r = m.r();
  return Modulus::with_complement(2.0 * std::sqrt(r) / (1.0 + r), m.one_minus() / (1.0 + r));
}

Modulus landen_descending(const Modulus& m) { return landen_ascending(m).complementary(); }

Modulus modulus_square(const Modulus& m) {
  const double r = m.r();
  return Modulus::with_complement(r * r, m.rc() * std::sqrt(1.0 + r * r));
}

Modulus modulus_sqrt(const Modulus& m) {
  return Modulus::with_complement(std::sqrt(m.r()), std::sqrt(m.one_minus()));
}

}  // namespace psiell
