// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "psiell/elliptic.hpp"
#include "psiell/format.hpp"
#include "psiell/psi.hpp"
#include "psiell/rectangle.hpp"
#include "psiell/verify.hpp"

using namespace psiell;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

// Runs the claims and condenses them; a failing claim is named in the detail.
Outcome claims(const std::vector<std::string>& ids, const VerifyOptions& opts = {}) {
  const auto reports = run_checks(ids, opts);
  std::size_t failed = 0;
  std::string failures;
  for (const CheckReport& r : reports) {
    if (passed(r)) continue;
    ++failed;
    failures += "; " + r.claim_id + " worst=" + num(r.worst_margin) + " threshold=" + num(r.threshold);
  }
  const std::string detail =
      std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " claims pass" + failures;
  return {failed == 0, detail};
}

std::vector<std::string> with_prefixes(const std::vector<std::string>& prefixes) {
  std::vector<std::string> ids;
  for (const auto& p : prefixes) {
    for (auto& id : claims_matching(p)) ids.push_back(std::move(id));
  }
  return ids;
}

Outcome special_value() {
  const double d = std::abs(psi(3.0 - 2.0 * std::numbers::sqrt2) - 1.0);
  return {d <= 1e-11, "|psi(3-2sqrt2) - 1| = " + num(d)};
}

Outcome special_constants() {
  const Modulus root = f8_root();
  const double r0 = psi(root);
  const bool ok = std::abs(root.r() - 0.479047) <= 5e-6 && std::abs(r0 - 8.24639) <= 5e-5;
  return {ok, "f8 root " + format_number(root.r(), 6) + ", r0 " + format_number(r0, 5)};
}

Outcome fixed_point() {
  const double d1 = std::abs(exterior_modulus(1.0) - 1.0);
  const Modulus m(3.0 - 2.0 * std::numbers::sqrt2);
  const EllipticValues v = elliptic_values(m);
  const double d2 = std::abs(v.kc / v.k - 2.0);
  return {d1 <= 1e-10 && d2 <= 1e-12, "|M(Gamma_1) - 1| = " + num(d1) + ", |K'/K - 2| = " + num(d2)};
}

Outcome identities() {
  VerifyOptions opts;
  opts.points = 1000;
  const auto ids = with_prefixes({"legendre-relation", "landen-transf", "lemma2.1-", "thm1.1-", "remark3.3-"});
  double worst = 0.0;
  for (const CheckReport& r : run_checks(ids, opts)) worst = std::max(worst, std::isnan(r.worst_margin) ? INFINITY : r.worst_margin);
  return {worst <= 1e-10, std::to_string(ids.size()) + " identities, worst residual " + num(worst)};
}

Outcome oracle() { return claims({"sec2-series-oracle"}); }

Outcome derivatives() { return claims({"deriv-psi-prime", "deriv-mu-prime"}); }

Outcome inequalities() {
  return claims({"advinequal", "thm1.2-bounds", "cor3.4-lower-bound", "cor3.5-bounds", "thm1.3-inequality",
                 "thm3.6-geometric-mean", "thm1.5-p-2", "thm1.5-p-1", "thm1.5-p0", "thm1.5-p1", "thm1.5-p2"});
}

Outcome shape() { return claims(with_prefixes({"thm3.1-", "lemma2.3-", "lemma2.4-", "lemma2.5-"})); }

Outcome modulus_behaviour() {
  Outcome out = claims({"thm4.1-sign-pattern", "thm4.2-bracket", "thm4.1-unimodal", "thm4.1-turning-point",
                        "thm4.1-tail-limit"});
  out.detail += "; gap(1e6) = " + num(comparison_gap(1e6));
  return out;
}

Outcome power_means() {
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> side(0.1, 10.0);
  int checks = 0;
  int failed = 0;
  auto count = [&](const CheckReport& r) {
    ++checks;
    if (!passed(r)) ++failed;
  };
  for (int i = 0; i < 50; ++i) {
    const double a = side(rng);
    const double b = side(rng);
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, a}}) {
      count(modulus_mean_chain_check(x, y));
      for (double p : {-2.0, -1.0, 1.0, 2.0}) count(modulus_power_mean_check(x, y, p));
    }
  }
  return {failed == 0, std::to_string(checks - failed) + "/" + std::to_string(checks) + " pair checks pass"};
}

Outcome round_trips() {
  double worst_psi = 0.0;
  for (double y : grid_points({1e-6, 1e6, 1000, GridLaw::logarithmic})) {
    worst_psi = std::max(worst_psi, std::abs(psi(psi_inv(y)) / y - 1.0));
  }
  double worst_mu = 0.0;
  for (double m : grid_points({1e-2, 1e2, 1000, GridLaw::logarithmic})) {
    worst_mu = std::max(worst_mu, std::abs(mu(mu_inv(m)) / m - 1.0));
  }
  return {worst_psi <= 1e-10 && worst_mu <= 1e-10, "psi " + num(worst_psi) + ", mu " + num(worst_mu)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"special value", special_value},
      {"special constants", special_constants},
      {"modulus fixed point", fixed_point},
      {"identity suite", identities},
      {"oracle equivalence", oracle},
      {"derivative checks", derivatives},
      {"inequality suite", inequalities},
      {"monotonicity/convexity/range suite", shape},
      {"modulus behaviour", modulus_behaviour},
      {"power-mean modulus theorem", power_means},
      {"round-trip inversion", round_trips},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = check();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", ++n, name, o.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
