#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psiell/modulus.hpp"
#include "psiell/report.hpp"

namespace psiell {

enum class GridLaw {
  uniform,
  endpoint_refined,  ///< a quarter of the points within (hi-lo)/100 of each end
  logarithmic
};

struct GridSpec {
  double lo;
  double hi;
  std::size_t n;
  GridLaw law;
};

/// Strictly increasing grid points, lo and hi included. Throws DomainError
/// unless lo < hi, n >= 2 and (for the logarithmic law) lo > 0.
std::vector<double> grid_points(const GridSpec& grid);

struct ClaimInfo {
  std::string id;
  std::string statement;
  GridSpec default_grid;
  bool pairwise;  ///< grid is taken per axis of an n x n pair grid
};

/// All registered claims in a fixed order.
const std::vector<ClaimInfo>& claim_registry();

/// Ids starting with prefix, registry order. Throws LookupError if none match.
std::vector<std::string> claims_matching(std::string_view prefix);

struct VerifyOptions {
  /// Replaces the default point count of every claim (per axis for pair claims).
  std::optional<std::size_t> points;
  /// Replaces psi in every psi-based claim; used to check that the suite
  /// detects a corrupted implementation.
  std::function<double(const Modulus&)> psi;
};

/// Runs one claim on its default grid. Throws LookupError for unknown ids.
CheckReport run_check(const std::string& claim_id, const VerifyOptions& options = {});

/// Runs one claim on the given grid.
CheckReport run_check(const std::string& claim_id, const GridSpec& grid,
                      const VerifyOptions& options = {});

/// Runs the listed claims concurrently; reports come back in input order.
std::vector<CheckReport> run_checks(const std::vector<std::string>& claim_ids,
                                    const VerifyOptions& options = {});

/// Every registered claim. Failures are reported, never thrown.
std::vector<CheckReport> run_all(const VerifyOptions& options = {});

/// One JSON object per report, no trailing newline.
std::string to_json_line(const CheckReport& report);

/// "pass claim_id worst=... threshold=... at=... points=..." with numbers at `digits` decimals.
std::string to_text_line(const CheckReport& report, int digits);

/// Header and row for CSV output.
std::string csv_header();
std::string to_csv_line(const CheckReport& report, int digits);

}  // namespace psiell
