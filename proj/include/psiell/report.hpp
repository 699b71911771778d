#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace psiell {

enum class Verdict { pass, fail };

/// How worst_margin is compared with the threshold.
enum class Criterion {
  residual_at_most,  ///< pass iff worst residual <= threshold
  margin_above       ///< pass iff smallest margin > threshold
};

struct GridPoint {
  GridPoint() = default;
  GridPoint(double px) : x(px) {}
  GridPoint(double px, double py) : x(px), y(py) {}

  double x = 0.0;
  std::optional<double> y;
};

/// Outcome of one numerical claim over its grid.
///
/// For two-variable claims with an equality case, worst_margin covers the
/// off-diagonal points and diagonal_residual the points with x == y.
struct CheckReport {
  std::string claim_id;
  Verdict verdict = Verdict::fail;
  Criterion criterion = Criterion::residual_at_most;
  double worst_margin = 0.0;
  double threshold = 0.0;
  GridPoint worst_point;
  std::size_t points_tested = 0;
  std::optional<double> diagonal_residual;
  std::optional<double> diagonal_threshold;
};

inline bool passed(const CheckReport& r) { return r.verdict == Verdict::pass; }

}  // namespace psiell
