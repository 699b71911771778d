#pragma once

#include "psiell/modulus.hpp"

namespace psiell::detail {

struct KE {
  double k;
  double e;
};

/// K and E from one AGM sweep. Throws DomainError at r = 1.
KE agm_ke(const Modulus& m);

// Unchecked versions of the public combinations; m must be interior.
double e_minus_rc2k(const Modulus& m);
double k_minus_e(const Modulus& m);
double e_minus_1mr_k(const Modulus& m);
double ec_minus_r_kc(const Modulus& m);

}  // namespace psiell::detail
