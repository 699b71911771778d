#pragma once

#include <cmath>

namespace psiell {

/// Elliptic modulus r in [0,1] together with its complement r' = sqrt(1 - r^2).
///
/// Both values are stored. Near either endpoint one of them is tiny and the
/// other is 1 - O(tiny), so recomputing the small one from the large one
/// loses digits. Constructors that know the complement analytically (Landen
/// arguments, inversion near r = 1) should use with_complement().
class Modulus {
 public:
  /// Builds from r; r' is formed as sqrt((1-r)(1+r)). Throws DomainError unless 0 <= r <= 1.
  explicit Modulus(double r);

  /// Builds from r' alone; r is formed as sqrt((1-r')(1+r')).
  static Modulus from_complement(double rc);

  /// Trusts both values. They must lie in [0,1] and satisfy r^2 + r'^2 = 1 to a few ulps.
  static Modulus with_complement(double r, double rc);

  double r() const noexcept { return r_; }
  double rc() const noexcept { return rc_; }

  /// The modulus r' with complement r.
  Modulus complementary() const noexcept { return Modulus(rc_, r_, Tag{}); }

  /// 1 - r, accurate near r = 1 where it is taken from r'^2 / (1 + r).
  double one_minus() const noexcept {
    return r_ <= 0.5 ? 1.0 - r_ : rc_ * rc_ / (1.0 + r_);
  }

  bool is_interior() const noexcept { return r_ > 0.0 && rc_ > 0.0; }

 private:
  struct Tag {};
  Modulus(double r, double rc, Tag) noexcept : r_(r), rc_(rc) {}

  double r_;
  double rc_;
};

// Modulus transforms that carry the complement along exactly.

/// 2 sqrt(r)/(1+r), complement (1-r)/(1+r).
Modulus landen_ascending(const Modulus& m);

/// (1-r)/(1+r), complement 2 sqrt(r)/(1+r).
Modulus landen_descending(const Modulus& m);

/// r^2, complement r' sqrt(1+r^2).
Modulus modulus_square(const Modulus& m);

/// sqrt(r), complement sqrt(1-r).
Modulus modulus_sqrt(const Modulus& m);

}  // namespace psiell
