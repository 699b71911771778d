#include "psiell/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "json.hpp"

#include "lemma_functions.hpp"
#include "psiell/elliptic.hpp"
#include "psiell/errors.hpp"
#include "psiell/format.hpp"
#include "psiell/landen.hpp"
#include "psiell/psi.hpp"
#include "psiell/rectangle.hpp"
#include "report_builder.hpp"

namespace psiell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Thresholds.
constexpr double kPairMargin = 1e-12;      // strictness off the diagonal
constexpr double kIdentityResidual = 1e-10;
constexpr double kLandenResidual = 1e-11;
constexpr double kLegendreResidual = 1e-12;
constexpr double kOracleResidual = 5e-13;
constexpr double kDerivativeResidual = 1e-6;
constexpr double kLimitTolerance = 1e-3;
constexpr double kEndOffset = 1e-6;
constexpr double kCoarseOffset = 1e-3;
constexpr double kFiniteDifferenceStep = 1e-5;

const GridSpec kUnitGrid{1e-6, 1.0 - 1e-6, 10000, GridLaw::endpoint_refined};
const GridSpec kIdentityGrid{1e-6, 1.0 - 1e-6, 1000, GridLaw::endpoint_refined};
const GridSpec kLandenGrid{1e-3, 1.0 - 1e-3, 1000, GridLaw::endpoint_refined};
const GridSpec kOracleGrid{0.05, 0.95, 19, GridLaw::uniform};
const GridSpec kDerivativeGrid{0.01, 0.95, 1000, GridLaw::uniform};
const GridSpec kPairGrid{0.02, 0.98, 100, GridLaw::uniform};
const GridSpec kAngleGrid{0.05, 10.0, 10000, GridLaw::uniform};
const GridSpec kSideGrid{1e-3, 1e3, 1000, GridLaw::logarithmic};
const GridSpec kSidePairGrid{0.1, 10.0, 50, GridLaw::logarithmic};
const GridSpec kTurningGrid{2.0, 20.0, 18001, GridLaw::uniform};
const GridSpec kTailGrid{1e2, 1e6, 1000, GridLaw::logarithmic};
const GridSpec kGrowthGrid{1e2, 1e8, 1000, GridLaw::logarithmic};
// Scalar claims ignore their grid.
const GridSpec kNoGrid{0.0, 1.0, 2, GridLaw::uniform};

using Fn = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

struct Context {
  std::function<double(const Modulus&)> psi;
};

using Runner = std::function<CheckReport(const std::string&, const GridSpec&, const Context&)>;

struct Claim {
  ClaimInfo info;
  Runner run;
};

template <typename F>
Fn on_modulus(F f) {
  return [f](double r) { return f(Modulus(r)); };
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// ---------------------------------------------------------------------------
// Claim shapes

enum class Direction { increasing, decreasing };
enum class Shape { convex, concave };

CheckReport monotone(const std::string& id, const GridSpec& grid, const Fn& f, Direction d) {
  detail::ReportBuilder out(id, Criterion::margin_above, 0.0);
  const auto xs = grid_points(grid);
  double previous = f(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double current = f(xs[i]);
    const double step = current - previous;
    out.offer(d == Direction::increasing ? step : -step, {xs[i]});
    previous = current;
  }
  return out.finish();
}

// Chord test on consecutive triples; works on non-uniform grids.
CheckReport curvature(const std::string& id, const GridSpec& grid, const Fn& f, Shape s) {
  detail::ReportBuilder out(id, Criterion::margin_above, 0.0);
  const auto xs = grid_points(grid);
  std::vector<double> fs(xs.size());
  std::transform(xs.begin(), xs.end(), fs.begin(), f);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double left = xs[i] - xs[i - 1];
    const double right = xs[i + 1] - xs[i];
    const double chord = (right * fs[i - 1] + left * fs[i + 1]) / (left + right);
    out.offer(s == Shape::convex ? chord - fs[i] : fs[i] - chord, {xs[i]});
  }
  return out.finish();
}

/// margin(x) > threshold at every grid point.
CheckReport positive(const std::string& id, const GridSpec& grid, const Fn& margin,
                     double threshold = 0.0) {
  detail::ReportBuilder out(id, Criterion::margin_above, threshold);
  for (double x : grid_points(grid)) out.offer(margin(x), {x});
  return out.finish();
}

/// residual(x) <= threshold at every grid point.
CheckReport small(const std::string& id, const GridSpec& grid, const Fn& residual,
                  double threshold) {
  detail::ReportBuilder out(id, Criterion::residual_at_most, threshold);
  for (double x : grid_points(grid)) out.offer(residual(x), {x});
  return out.finish();
}

CheckReport scalar(const std::string& id, double value, double target, double threshold) {
  detail::ReportBuilder out(id, Criterion::residual_at_most, threshold);
  out.offer(std::abs(value - target), {value});
  return out.finish();
}

struct Limit {
  enum Kind { finite, plus_infinity, minus_infinity } kind;
  double value = 0.0;
};

Limit limit(double v) { return {Limit::finite, v}; }
constexpr Limit kPlusInfinity{Limit::plus_infinity};
constexpr Limit kMinusInfinity{Limit::minus_infinity};

// Finite limits must agree within 1e-3 at offset 1e-6 from the end; for an
// infinite limit only the direction of growth towards the end is checked.
CheckReport range(const std::string& id, const Fn& f, Limit at_zero, Limit at_one) {
  detail::ReportBuilder out(id, Criterion::residual_at_most, kLimitTolerance);
  const auto side = [&](double near, double coarse, Limit lim) {
    const double v = f(near);
    if (lim.kind == Limit::finite) {
      out.offer(std::abs(v - lim.value), {near});
      return;
    }
    const double w = f(coarse);
    const bool grows = lim.kind == Limit::plus_infinity ? v > w : v < w;
    out.offer(grows ? 0.0 : kInf, {near});
  };
  side(kEndOffset, kCoarseOffset, at_zero);
  side(1.0 - kEndOffset, 1.0 - kCoarseOffset, at_one);
  return out.finish();
}

/// lhs(r,s) <= rhs(r,s) on the pair grid. With equality_on_diagonal the
/// points r == s only need |lhs - rhs| to vanish to 1e-10 relative.
CheckReport pairwise(const std::string& id, const GridSpec& grid, const Fn2& lhs, const Fn2& rhs,
                     bool equality_on_diagonal) {
  detail::ReportBuilder out(id, Criterion::margin_above, kPairMargin);
  const auto xs = grid_points(grid);
  for (double r : xs) {
    for (double s : xs) {
      const double l = lhs(r, s);
      const double u = rhs(r, s);
      if (equality_on_diagonal && r == s) {
        out.offer_diagonal(relative_gap(l, u), {r, s}, kIdentityResidual);
      } else {
        out.offer(u - l, {r, s});
      }
    }
  }
  return out.finish();
}

/// Folds per-pair reports of the modulus theorem into one report.
CheckReport pairwise_reports(const std::string& id, const GridSpec& grid,
                             const std::function<CheckReport(double, double)>& check) {
  detail::ReportBuilder out(id, Criterion::margin_above, kPairMargin);
  const auto xs = grid_points(grid);
  for (double a : xs) {
    for (double b : xs) {
      const CheckReport r = check(a, b);
      if (r.diagonal_residual) {
        out.offer_diagonal(*r.diagonal_residual, r.worst_point, kIdentityResidual);
      } else {
        out.offer(r.worst_margin, r.worst_point);
      }
    }
  }
  return out.finish();
}

CheckReport finite_difference(const std::string& id, const GridSpec& grid, const Fn& f,
                              const Fn& derivative) {
  return small(
      id, grid,
      [&](double x) {
        const double h = kFiniteDifferenceStep;
        const double estimate = (f(x + h) - f(x - h)) / (2.0 * h);
        const double exact = derivative(x);
        return std::abs(estimate - exact) / std::abs(exact);
      },
      kDerivativeResidual);
}

// ---------------------------------------------------------------------------
// Functions shared by several claims

double one_minus_sqrt(double r) { return lemma::one_minus_sqrt(Modulus(r)); }

double psi_of(const Context& c, double r) { return c.psi(Modulus(r)); }

// (1 - sqrt r)^2 psi(r) / r
double thm12_f(const Context& c, double r) {
  const double d = one_minus_sqrt(r);
  return d * d * psi_of(c, r) / r;
}

// (1 - sqrt r) artanh(1 - sqrt r) psi(r) / r
double cor34_g(const Context& c, double r) {
  const double d = one_minus_sqrt(r);
  return d * std::atanh(d) * psi_of(c, r) / r;
}

// psi(1 / cosh x), with the complement tanh x carried exactly.
double psi_sech(const Context& c, double x) {
  return c.psi(Modulus::with_complement(1.0 / std::cosh(x), std::tanh(x)));
}

double complement(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

// m(a) = mu(psi^{-1}(a)) / pi
double m_of(double a) { return mu(psi_inv(a)) / kPi; }

const double kThreeMinusTwoSqrt2 = 3.0 - 2.0 * std::numbers::sqrt2;

// ---------------------------------------------------------------------------
// Registry

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;
  const auto add = [&](std::string id, std::string statement, GridSpec grid, Runner run,
                       bool pair = false) {
    claims.push_back({{std::move(id), std::move(statement), grid, pair}, std::move(run)});
  };

  // Elliptic integrals.
  add("legendre-relation", "E K' + E' K - K K' = pi/2, residual relative to K K'", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return small(id, g, [](double r) {
          const auto v = elliptic_values(r);
          return std::abs(legendre_residual(r)) / (v.k * v.kc);
        }, kLegendreResidual);
      });
  add("sec2-series-oracle", "AGM K and E agree with the Maclaurin series", kOracleGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return small(id, g, [](double r) {
          const double dk = relative_gap(ellip_k(r), series_oracle(Integral::K, r));
          const double de = relative_gap(ellip_e(r), series_oracle(Integral::E, r));
          return std::max(dk, de);
        }, kOracleResidual);
      });
  add("sec2-k-increasing", "K is strictly increasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return monotone(id, g, [](double r) { return ellip_k(r); }, Direction::increasing);
      });
  add("sec2-e-decreasing", "E is strictly decreasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return monotone(id, g, [](double r) { return ellip_e(r); }, Direction::decreasing);
      });

  // Landen transformations and their quadratic forms.
  const IdentityId landen_ids[] = {IdentityId::transfk1, IdentityId::transfk2,
                                   IdentityId::transfe1, IdentityId::transfe2};
  for (std::size_t i = 0; i < 4; ++i) {
    add("landen-" + std::string(identity_name(landen_ids[i])), "Landen transformation",
        kLandenGrid, [i](const std::string& id, const GridSpec& g, const Context&) {
          return small(id, g, [i](double r) { return landen_residuals(r)[i].residual; },
                       kLandenResidual);
        });
  }
  add("landen-composition", "two Landen steps through (1-r^2)/(1+r^2) reproduce K(t^2)",
      kLandenGrid, [](const std::string& id, const GridSpec& g, const Context&) {
        return small(id, g, [](double r) { return landen_chain_residual(r); }, kLandenResidual);
      });
  const IdentityId quadratic_ids[] = {IdentityId::mytransfk, IdentityId::mytransfkk,
                                      IdentityId::mytransfe, IdentityId::mytransfee};
  for (std::size_t i = 0; i < 4; ++i) {
    add("lemma2.1-" + std::string(identity_name(quadratic_ids[i])),
        "quadratic transformation in t = (1-r)/(1+r)", kLandenGrid,
        [i](const std::string& id, const GridSpec& g, const Context&) {
          return small(id, g, [i](double r) { return quadratic_residuals(r)[i].residual; },
                       kLandenResidual);
        });
  }

  // Lemma 2.3.
  add("lemma2.3-part1-increasing", "r^-2 (E - r'^2 K) strictly increasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return monotone(id, g, on_modulus(lemma::scaled_e_minus_rc2k_excess),
                        Direction::increasing);
      });
  add("lemma2.3-part1-convex", "r^-2 (E - r'^2 K) convex", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return curvature(id, g, on_modulus(lemma::scaled_e_minus_rc2k_excess), Shape::convex);
      });
  add("lemma2.3-part1-range", "r^-2 (E - r'^2 K) onto (pi/4, 1)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context&) {
        return range(id, on_modulus(lemma::scaled_e_minus_rc2k), limit(0.25 * kPi), limit(1.0));
      });
  for (const double c : {0.5, 1.0}) {
    const std::string tag = c == 0.5 ? "c0.5" : "c1";
    add("lemma2.3-part2-" + tag + "-decreasing", "r'^c K decreasing", kUnitGrid,
        [c](const std::string& id, const GridSpec& g, const Context&) {
          // pi/2 - r'^c K increasing
          return monotone(id, g, [c](double r) {
            return lemma::rc_power_k_deficit(c, Modulus(r));
          }, Direction::increasing);
        });
    add("lemma2.3-part2-" + tag + "-range", "r'^c K onto (0, pi/2]", kNoGrid,
        [c](const std::string& id, const GridSpec&, const Context&) {
          return range(id, [c](double r) { return lemma::rc_power_k(c, Modulus(r)); },
                       limit(0.5 * kPi), limit(0.0));
        });
  }

  // Lemma 2.4.
  struct Part {
    std::string name;
    Fn f;
    Direction direction;
    Fn deficit;  // constant minus f, tested instead of f when set
    std::optional<Shape> shape;
    Limit at_zero;
    Limit at_one;
  };
  const std::vector<Part> parts = {
      {"f1", on_modulus(lemma::f1), Direction::increasing, {}, Shape::concave, limit(0.0),
       limit(1.0)},
      {"f2", on_modulus(lemma::f2), Direction::decreasing, {}, {}, limit(0.5 * kPi), limit(1.0)},
      {"f3", on_modulus(lemma::f3), Direction::decreasing, {}, Shape::convex, limit(1.0),
       limit(0.0)},
      {"f4", on_modulus(lemma::f4), Direction::decreasing, {}, {}, limit(1.0), limit(0.0)},
      {"f5", on_modulus(lemma::f5), Direction::decreasing, on_modulus(lemma::f5_deficit), {},
       limit(0.5 * kPi), limit(1.0)},
      {"f6", on_modulus(lemma::f6), Direction::increasing, {}, {}, kMinusInfinity, limit(0.0)},
      {"f7", on_modulus(lemma::f7), Direction::decreasing, {}, {}, limit(1.0), limit(0.0)},
      {"f8", on_modulus(lemma::f8), Direction::increasing, {}, {}, limit(0.0), kPlusInfinity},
  };
  for (const Part& p : parts) {
    const bool rising = p.direction == Direction::increasing;
    const Fn tested = p.deficit ? p.deficit : p.f;
    // A deficit moves the opposite way.
    const Direction dir = p.deficit ? (rising ? Direction::decreasing : Direction::increasing)
                                    : p.direction;
    add("lemma2.4-" + p.name + (rising ? "-increasing" : "-decreasing"), "monotone on (0,1)",
        kUnitGrid, [tested, dir](const std::string& id, const GridSpec& g, const Context&) {
          return monotone(id, g, tested, dir);
        });
    if (p.shape) {
      const Shape s = *p.shape;
      const Fn f = p.f;
      add("lemma2.4-" + p.name + (s == Shape::convex ? "-convex" : "-concave"),
          "curvature on (0,1)", kUnitGrid,
          [f, s](const std::string& id, const GridSpec& g, const Context&) {
            return curvature(id, g, f, s);
          });
    }
    if (p.name == "f6") {
      add("lemma2.4-f6-negative", "(3-r) E' - (1+r) K' < 0", kUnitGrid,
          [](const std::string& id, const GridSpec& g, const Context&) {
            return positive(id, g, [](double r) { return -lemma::f6(Modulus(r)); });
          });
    }
    const Fn f = p.f;
    const Limit lo = p.at_zero;
    const Limit hi = p.at_one;
    add("lemma2.4-" + p.name + "-range", "endpoint limits", kNoGrid,
        [f, lo, hi](const std::string& id, const GridSpec&, const Context&) {
          return range(id, f, lo, hi);
        });
  }
  add("lemma2.4-f8-root", "f8(0.479047...) = 1", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context&) {
        return scalar(id, f8_root().r(), 0.479047, 5e-6);
      });

  // Lemma 2.5.
  add("lemma2.5-increasing", "mu(r) psi(r) strictly increasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return monotone(id, g, [&c](double r) { return mu(r) * psi_of(c, r); },
                        Direction::increasing);
      });
  add("lemma2.5-range", "mu(r) psi(r) onto (0, inf)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context& c) {
        return range(id, [&c](double r) { return mu(r) * psi_of(c, r); }, limit(0.0),
                     kPlusInfinity);
      });

  // Theorem 1.1, Corollary 3.2, Remark 3.3.
  add("thm1.1-identity-1", "psi(r^2) psi(((1-r)/(1+r))^2) = 1", kIdentityGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return small(id, g, [&c](double r) {
          const Modulus m(r);
          return std::abs(c.psi(modulus_square(m)) *
                          c.psi(modulus_square(landen_descending(m))) - 1.0);
        }, kIdentityResidual);
      });
  add("thm1.1-identity-2", "psi((1-r)/(1+r)) psi((1-r')/(1+r')) = 1", kIdentityGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return small(id, g, [&c](double r) {
          const Modulus m(r);
          return std::abs(c.psi(landen_descending(m)) *
                          c.psi(landen_descending(m.complementary())) - 1.0);
        }, kIdentityResidual);
      });
  add("cor3.2-special-value", "psi(3 - 2 sqrt 2) = 1", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context& c) {
        return scalar(id, psi_of(c, kThreeMinusTwoSqrt2), 1.0, 1e-11);
      });
  add("remark3.3-reciprocal", "1/psi(r) = psi(((1-sqrt r)/(1+sqrt r))^2)", kIdentityGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return small(id, g, [&c](double r) {
          const Modulus m(r);
          const Modulus s = modulus_square(landen_descending(modulus_sqrt(m)));
          return std::abs(c.psi(m) * c.psi(s) - 1.0);
        }, kIdentityResidual);
      });
  add("remark3.3-mu-product", "mu(r^2) mu(((1-r)/(1+r))^2) = pi^2", kIdentityGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return small(id, g, [](double r) { return reciprocity_residual(r).mu_product; },
                     kIdentityResidual);
      });

  // Theorem 3.1.
  add("thm3.1-increasing", "psi strictly increasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return monotone(id, g, [&c](double r) { return psi_of(c, r); }, Direction::increasing);
      });
  add("thm3.1-convex", "psi convex", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return curvature(id, g, [&c](double r) { return psi_of(c, r); }, Shape::convex);
      });
  add("thm3.1-ratio-increasing", "psi(r)/r strictly increasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return monotone(id, g, [&c](double r) { return psi_of(c, r) / r; },
                        Direction::increasing);
      });
  add("thm3.1-range", "psi onto (0, inf)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context& c) {
        return range(id, [&c](double r) { return psi_of(c, r); }, limit(0.0), kPlusInfinity);
      });
  add("thm3.1-ratio-range", "psi(r)/r onto (pi, inf)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context& c) {
        return range(id, [&c](double r) { return psi_of(c, r) / r; }, limit(kPi), kPlusInfinity);
      });
  add("deriv-psi-prime", "psi' matches central differences", kDerivativeGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return finite_difference(id, g, [&c](double r) { return psi_of(c, r); },
                                 [](double r) { return psi_prime(r); });
      });
  add("deriv-mu-prime", "mu' matches central differences", kDerivativeGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return finite_difference(id, g, [](double r) { return mu(r); },
                                 [](double r) { return mu_prime(r); });
      });

  // Elementary bounds.
  add("advinequal", "pi r/(1-r)^2 < psi(r) < 16 r/(pi (1-r)^2)", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return positive(id, g, [&c](double r) {
          const double d = Modulus(r).one_minus();
          const double v = psi_of(c, r);
          return std::min(v - kPi * r / (d * d), 16.0 * r / (kPi * d * d) - v);
        });
      });
  add("thm1.2-decreasing", "(1-sqrt r)^2 psi(r)/r strictly decreasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return monotone(id, g, [&c](double r) { return thm12_f(c, r); }, Direction::decreasing);
      });
  add("thm1.2-bounds", "4r/(pi (1-sqrt r)^2) < psi(r) < pi r/(1-sqrt r)^2", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return positive(id, g, [&c](double r) {
          const double d = one_minus_sqrt(r);
          const double v = psi_of(c, r);
          return std::min(v - 4.0 * r / (kPi * d * d), kPi * r / (d * d) - v);
        });
      });
  add("thm1.2-range", "(1-sqrt r)^2 psi(r)/r onto (4/pi, pi)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context& c) {
        return range(id, [&c](double r) { return thm12_f(c, r); }, limit(kPi),
                     limit(4.0 / kPi));
      });
  add("cor3.4-decreasing", "(1-sqrt r) artanh(1-sqrt r) psi(r)/r strictly decreasing", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return monotone(id, g, [&c](double r) { return cor34_g(c, r); }, Direction::decreasing);
      });
  add("cor3.4-lower-bound", "(1-sqrt r) artanh(1-sqrt r) psi(r)/r > 4/pi", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return positive(id, g, [&c](double r) { return cor34_g(c, r) - 4.0 / kPi; });
      });
  add("cor3.4-range", "(1-sqrt r) artanh(1-sqrt r) psi(r)/r onto (4/pi, inf)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context& c) {
        return range(id, [&c](double r) { return cor34_g(c, r); }, kPlusInfinity,
                     limit(4.0 / kPi));
      });
  add("cor3.5-bounds", "combined max-lower / min-upper bounds enclose psi", kUnitGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return positive(id, g, [&c](double r) {
          const BoundPair b = psi_bounds(r);
          const double v = psi_of(c, r);
          return std::min(v - b.lower, b.upper - v);
        });
      });

  // Theorem 1.3 and the remark after it.
  add("thm1.3-decreasing", "psi(1/cosh x) decreasing in x", kAngleGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return monotone(id, g, [&c](double x) { return psi_sech(c, x); }, Direction::decreasing);
      });
  add("thm1.3-convex", "psi(1/cosh x) convex in x", kAngleGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return curvature(id, g, [&c](double x) { return psi_sech(c, x); }, Shape::convex);
      });
  add("thm1.3-inequality", "2 psi(sqrt(2rs)/sqrt(1+rs+r's')) <= psi(r) + psi(s)", kPairGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return pairwise(id, g, [&c](double r, double s) {
          const double t = std::sqrt(2.0 * r * s / (1.0 + r * s + complement(r) * complement(s)));
          return 2.0 * psi_of(c, t);
        }, [&c](double r, double s) { return psi_of(c, r) + psi_of(c, s); }, true);
      }, true);
  add("thm1.3-remark-inequality", "2 psi(rs/(1+r's')) <= psi(r) + psi(s)", kPairGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return pairwise(id, g, [&c](double r, double s) {
          return 2.0 * psi_of(c, r * s / (1.0 + complement(r) * complement(s)));
        }, [&c](double r, double s) { return psi_of(c, r) + psi_of(c, s); }, false);
      }, true);
  add("thm1.3-remark-weaker", "2 psi(rs/(1+r's')) <= 2 psi(sqrt(2rs)/sqrt(1+rs+r's'))",
      kPairGrid, [](const std::string& id, const GridSpec& g, const Context& c) {
        return pairwise(id, g, [&c](double r, double s) {
          return 2.0 * psi_of(c, r * s / (1.0 + complement(r) * complement(s)));
        }, [&c](double r, double s) {
          const double t = std::sqrt(2.0 * r * s / (1.0 + r * s + complement(r) * complement(s)));
          return 2.0 * psi_of(c, t);
        }, false);
      }, true);

  // Theorems 3.6 and 1.5.
  add("thm3.6-geometric-mean", "psi(sqrt(rs)) <= sqrt(psi(r) psi(s))", kPairGrid,
      [](const std::string& id, const GridSpec& g, const Context& c) {
        return pairwise(id, g, [&c](double r, double s) { return psi_of(c, std::sqrt(r * s)); },
                        [&c](double r, double s) {
                          return std::sqrt(psi_of(c, r)) * std::sqrt(psi_of(c, s));
                        }, true);
      }, true);
  for (const double p : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
    const std::string tag = p == 0.5 ? "0.5" : std::to_string(static_cast<int>(p));
    add("thm1.5-p" + tag, p >= 0.0 ? "psi(H_p(r,s)) <= H_p(psi(r), psi(s))"
                                   : "psi(H_p(r,s)) >= H_p(psi(r), psi(s))",
        kPairGrid, [p](const std::string& id, const GridSpec& g, const Context& c) {
          const Fn2 of_mean = [&c, p](double r, double s) {
            return psi_of(c, power_mean(p, r, s));
          };
          const Fn2 mean_of = [&c, p](double r, double s) {
            return power_mean(p, psi_of(c, r), psi_of(c, s));
          };
          return p >= 0.0 ? pairwise(id, g, of_mean, mean_of, true)
                          : pairwise(id, g, mean_of, of_mean, true);
        }, true);
  }

  // Section 4.
  add("sec4-fixed-point", "M(Gamma_1) = 1", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context&) {
        return scalar(id, exterior_modulus(1.0), 1.0, 1e-10);
      });
  add("sec4-kc-over-k", "K'(3 - 2 sqrt 2) = 2 K(3 - 2 sqrt 2)", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context&) {
        const auto v = elliptic_values(kThreeMinusTwoSqrt2);
        return scalar(id, v.kc / v.k, 2.0, 1e-12);
      });
  add("thm4.1-sign-pattern", "M(Gamma_b) > b for b < 1, < b for b > 1", kSideGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        detail::ReportBuilder out(id, Criterion::margin_above, 0.0);
        for (double b : grid_points(g)) {
          const double m = exterior_modulus(b);
          if (b == 1.0) {
            out.offer_diagonal(std::abs(m - 1.0), {b}, kIdentityResidual);
          } else {
            out.offer((b < 1.0 ? m - b : b - m) / b, {b});
          }
        }
        return out.finish();
      });
  add("thm4.1-unimodal", "comparison gap rises, then falls, turning around r0", kSideGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        detail::ReportBuilder out(id, Criterion::margin_above, 0.0);
        const auto xs = grid_points(g);
        std::vector<double> fs(xs.size());
        std::transform(xs.begin(), xs.end(), fs.begin(), comparison_gap);
        const std::size_t k = std::max_element(fs.begin(), fs.end()) - fs.begin();
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
          const double step = fs[i + 1] - fs[i];
          out.offer(i < k ? step : -step, {xs[i + 1]});
        }
        const double r0 = r0_constant();
        const double left = xs[k == 0 ? 0 : k - 1];
        const double right = xs[std::min(k + 1, xs.size() - 1)];
        out.offer(std::min(r0 - left, right - r0), {r0});
        return out.finish();
      });
  add("thm4.1-turning-point", "argmax of the comparison gap is within 1e-3 of r0", kTurningGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        const auto xs = grid_points(g);
        std::vector<double> fs(xs.size());
        std::transform(xs.begin(), xs.end(), fs.begin(), comparison_gap);
        const std::size_t k = std::max_element(fs.begin(), fs.end()) - fs.begin();
        detail::ReportBuilder out(id, Criterion::residual_at_most, 1e-3);
        out.offer(std::abs(xs[k] - r0_constant()), {xs[k]});
        return out.finish();
      });
  add("thm4.1-r0", "r0 = psi(f8 root) = 8.24639...", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context&) {
        return scalar(id, r0_constant(), 8.24639, 5e-5);
      });
  add("thm4.1-tail-decreasing", "comparison gap decreasing on [1e2, 1e6]", kTailGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return monotone(id, g, comparison_gap, Direction::decreasing);
      });
  add("thm4.1-tail-limit", "comparison gap tends to 0: f(1e6) < 1e-2", kNoGrid,
      [](const std::string& id, const GridSpec&, const Context&) {
        detail::ReportBuilder out(id, Criterion::residual_at_most, 1e-2);
        out.offer(std::abs(comparison_gap(1e6)), {1e6});
        return out.finish();
      });
  add("thm4.2-bracket", "L(b) < M(Gamma_b) < U(b)", kSideGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return positive(id, g, [](double b) {
          const BoundPair lu = modulus_bounds(b);
          const double m = exterior_modulus(b);
          return std::min(m - lu.lower, lu.upper - m);
        });
      });
  add("thm4.2-lower-relaxation", "L(b) > (2/pi)(1 - (1+sqrt(4b/pi))^-1) log(2(1+sqrt(4b/pi)))",
      kSideGrid, [](const std::string& id, const GridSpec& g, const Context&) {
        return positive(id, g, [](double b) {
          return modulus_bounds(b).lower - modulus_bounds_relaxed(b).lower;
        });
      });
  add("thm4.2-upper-relaxation", "U(b) < (2/pi) log(2(1+sqrt(pi b)))", kSideGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        return positive(id, g, [](double b) {
          return modulus_bounds_relaxed(b).upper - modulus_bounds(b).upper;
        });
      });
  add("thm4.2-log-growth", "pi L/log b, pi M/log b, pi U/log b decrease towards 1", kGrowthGrid,
      [](const std::string& id, const GridSpec& g, const Context&) {
        detail::ReportBuilder out(id, Criterion::margin_above, 0.0);
        std::array<double, 3> previous{};
        bool first = true;
        for (double b : grid_points(g)) {
          const BoundPair lu = modulus_bounds(b);
          const double scale = kPi / std::log(b);
          const std::array<double, 3> ratio{scale * lu.lower, scale * exterior_modulus(b),
                                            scale * lu.upper};
          for (std::size_t j = 0; j < 3; ++j) {
            out.offer(ratio[j] - 1.0, {b});
            if (!first) out.offer(previous[j] - ratio[j], {b});
          }
          previous = ratio;
          first = false;
        }
        return out.finish();
      });
  add("sec4-log-convex", "m((a+b)/2) <= sqrt(m(a) m(b)), m(a) = mu(psi^-1(a))/pi",
      kSidePairGrid, [](const std::string& id, const GridSpec& g, const Context&) {
        return pairwise(id, g, [](double a, double b) { return m_of(0.5 * (a + b)); },
                        [](double a, double b) { return std::sqrt(m_of(a) * m_of(b)); }, true);
      }, true);
  add("sec4-mean-chain", "harmonic <= geometric <= arithmetic <= M at the arithmetic mean",
      kSidePairGrid, [](const std::string& id, const GridSpec& g, const Context&) {
        return pairwise_reports(id, g, modulus_mean_chain_check);
      }, true);
  for (const double p : {-2.0, -1.0, 1.0, 2.0}) {
    add("sec4-power-mean-p" + std::to_string(static_cast<int>(p)),
        p < 0.0 ? "M(Gamma_{H_p}) <= H_p(M_a, M_b)" : "M(Gamma_{H_p}) >= H_p(M_a, M_b)",
        kSidePairGrid, [p](const std::string& id, const GridSpec& g, const Context&) {
          return pairwise_reports(id, g, [p](double a, double b) {
            return modulus_power_mean_check(a, b, p);
          });
        }, true);
  }

  return claims;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

const Claim& find_claim(const std::string& id) {
  for (const Claim& c : registry()) {
    if (c.info.id == id) return c;
  }
  throw LookupError("unknown claim id: " + id);
}

Context make_context(const VerifyOptions& options) {
  Context c;
  if (options.psi) {
    c.psi = options.psi;
  } else {
    c.psi = [](const Modulus& m) { return psi(m); };
  }
  return c;
}

CheckReport execute(const Claim& claim, const GridSpec& grid, const Context& context) {
  try {
    return claim.run(claim.info.id, grid, context);
  } catch (const std::exception&) {
    // An evaluation error inside the grid is a failed claim, not a crash.
    CheckReport failed;
    failed.claim_id = claim.info.id;
    failed.verdict = Verdict::fail;
    failed.worst_margin = std::numeric_limits<double>::quiet_NaN();
    return failed;
  }
}

GridSpec effective_grid(const Claim& claim, const VerifyOptions& options) {
  GridSpec g = claim.info.default_grid;
  if (options.points) g.n = *options.points;
  return g;
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v, 0);
}

}  // namespace

std::vector<double> grid_points(const GridSpec& grid) {
  if (!(grid.lo < grid.hi) || grid.n < 2) {
    throw DomainError("grid: need lo < hi and n >= 2");
  }
  const double lo = grid.lo;
  const double hi = grid.hi;
  const std::size_t n = grid.n;
  std::vector<double> xs(n);
  const auto fill = [&xs](std::size_t from, std::size_t count, double a, double b, bool closed) {
    const double denom = static_cast<double>(closed ? count - 1 : count);
    for (std::size_t i = 0; i < count; ++i) xs[from + i] = a + (b - a) * (i / denom);
  };
  switch (grid.law) {
    case GridLaw::uniform:
      fill(0, n, lo, hi, true);
      break;
    case GridLaw::logarithmic: {
      if (!(lo > 0.0)) throw DomainError("grid: logarithmic law needs lo > 0");
      const double a = std::log(lo);
      const double b = std::log(hi);
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::exp(a + (b - a) * (static_cast<double>(i) / static_cast<double>(n - 1)));
      }
      xs.front() = lo;
      xs.back() = hi;
      break;
    }
    case GridLaw::endpoint_refined: {
      if (n < 8) {
        fill(0, n, lo, hi, true);
        break;
      }
      const double w = (hi - lo) / 100.0;
      const std::size_t edge = n / 4;
      const std::size_t middle = n - 2 * edge;
      fill(0, edge, lo, lo + w, false);
      fill(edge, middle, lo + w, hi - w, false);
      fill(edge + middle, edge, hi - w, hi, true);
      break;
    }
  }
  return xs;
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const Claim& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> claims_matching(std::string_view prefix) {
  std::vector<std::string> ids;
  for (const Claim& c : registry()) {
    if (std::string_view(c.info.id).starts_with(prefix)) ids.push_back(c.info.id);
  }
  if (ids.empty()) throw LookupError("no claim id starts with '" + std::string(prefix) + "'");
  return ids;
}

CheckReport run_check(const std::string& claim_id, const VerifyOptions& options) {
  const Claim& claim = find_claim(claim_id);
  return execute(claim, effective_grid(claim, options), make_context(options));
}

CheckReport run_check(const std::string& claim_id, const GridSpec& grid,
                      const VerifyOptions& options) {
  return execute(find_claim(claim_id), grid, make_context(options));
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& claim_ids,
                                    const VerifyOptions& options) {
  std::vector<const Claim*> claims;
  for (const std::string& id : claim_ids) claims.push_back(&find_claim(id));
  const Context context = make_context(options);

  std::vector<CheckReport> reports(claims.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < claims.size(); i = next++) {
      reports[i] = execute(*claims[i], effective_grid(*claims[i], options), context);
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), claims.size());
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  return reports;
}

std::vector<CheckReport> run_all(const VerifyOptions& options) {
  std::vector<std::string> ids;
  for (const Claim& c : registry()) ids.push_back(c.info.id);
  return run_checks(ids, options);
}

std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["verdict"] = passed(r) ? "pass" : "fail";
  j["criterion"] = r.criterion == Criterion::residual_at_most ? "residual_at_most" : "margin_above";
  j["worst_margin"] = number(r.worst_margin);
  j["threshold"] = number(r.threshold);
  auto point = nlohmann::ordered_json::array({number(r.worst_point.x)});
  if (r.worst_point.y) point.push_back(number(*r.worst_point.y));
  j["worst_point"] = point;
  j["points_tested"] = r.points_tested;
  if (r.diagonal_residual) j["diagonal_residual"] = number(*r.diagonal_residual);
  return j.dump();
}

std::string to_text_line(const CheckReport& r, int digits) {
  std::string line = passed(r) ? "pass " : "FAIL ";
  line += r.claim_id;
  line += r.criterion == Criterion::residual_at_most ? " residual=" : " margin=";
  line += format_number(r.worst_margin, digits);
  line += r.criterion == Criterion::residual_at_most ? " <= " : " > ";
  line += format_number(r.threshold, digits);
  line += " at " + format_number(r.worst_point.x, digits);
  if (r.worst_point.y) line += "," + format_number(*r.worst_point.y, digits);
  if (r.diagonal_residual) line += " diagonal=" + format_number(*r.diagonal_residual, digits);
  line += " points=" + std::to_string(r.points_tested);
  return line;
}

std::string csv_header() {
  return "claim_id,verdict,criterion,worst_margin,threshold,worst_x,worst_y,points_tested,"
         "diagonal_residual";
}

std::string to_csv_line(const CheckReport& r, int digits) {
  std::string line = r.claim_id;
  line += passed(r) ? ",pass," : ",fail,";
  line += r.criterion == Criterion::residual_at_most ? "residual_at_most," : "margin_above,";
  line += format_number(r.worst_margin, digits) + ",";
  line += format_number(r.threshold, digits) + ",";
  line += format_number(r.worst_point.x, digits) + ",";
  if (r.worst_point.y) line += format_number(*r.worst_point.y, digits);
  line += "," + std::to_string(r.points_tested) + ",";
  if (r.diagonal_residual) line += format_number(*r.diagonal_residual, digits);
  return line;
}

}  // namespace psiell
