#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "psiell/report.hpp"

namespace psiell::detail {

/// Accumulates the worst value of a claim over its grid. A NaN poisons the
/// report: it is kept as the worst value and the verdict is fail.
class ReportBuilder {
 public:
  ReportBuilder(std::string id, Criterion criterion, double threshold) {
    report_.claim_id = std::move(id);
    report_.criterion = criterion;
    report_.threshold = threshold;
  }

  void offer(double value, GridPoint at) {
    ++report_.points_tested;
    ++main_points_;
    if (poisoned_) return;
    const bool worse = report_.criterion == Criterion::residual_at_most
                           ? value > report_.worst_margin
                           : value < report_.worst_margin;
    if (main_points_ == 1 || std::isnan(value) || worse) {
      report_.worst_margin = value;
      report_.worst_point = at;
      poisoned_ = std::isnan(value);
    }
  }

  /// Residual at a point where the claim holds with equality.
  void offer_diagonal(double residual, GridPoint at, double threshold) {
    ++report_.points_tested;
    report_.diagonal_threshold = threshold;
    const double current = report_.diagonal_residual.value_or(0.0);
    if (std::isnan(current)) return;
    if (!report_.diagonal_residual || std::isnan(residual) || residual > current) {
      report_.diagonal_residual = residual;
      diagonal_point_ = at;
    }
  }

  CheckReport finish() {
    bool ok = true;
    if (main_points_ > 0) {
      ok = report_.criterion == Criterion::residual_at_most
               ? report_.worst_margin <= report_.threshold
               : report_.worst_margin > report_.threshold;
    } else if (report_.diagonal_residual) {
      // Only equality points were tested; report the diagonal as the main value.
      report_.criterion = Criterion::residual_at_most;
      report_.worst_margin = *report_.diagonal_residual;
      report_.threshold = *report_.diagonal_threshold;
      report_.worst_point = diagonal_point_;
    } else {
      ok = false;
    }
    if (report_.diagonal_residual) {
      ok = ok && *report_.diagonal_residual <= *report_.diagonal_threshold;
    }
    report_.verdict = ok ? Verdict::pass : Verdict::fail;
    return report_;
  }

 private:
  CheckReport report_;
  std::size_t main_points_ = 0;
  bool poisoned_ = false;
  GridPoint diagonal_point_;
};

}  // namespace psiell::detail
