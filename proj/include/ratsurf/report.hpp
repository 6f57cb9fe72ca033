#pragma once

// Verification reports behind the ratsurf command-line tool.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ratsurf/cohom.hpp"
#include "ratsurf/conditions.hpp"
#include "ratsurf/integer.hpp"
#include "ratsurf/theta.hpp"

namespace ratsurf {

enum class ReportFormat { Text, Json, Csv };
enum class ReportMode { Genus, Cohom, Conditions, Zseries, Report };

inline constexpr std::size_t kDefaultTruncCap = 200;

/// Truncation cap: RATSURF_MAX_TRUNC if set and valid, else kDefaultTruncCap.
std::size_t truncation_cap();

struct ReportConfig {
  ReportMode mode = ReportMode::Report;
  std::string surface;
  std::string divisor;
  std::optional<std::string> polarization;
  std::int64_t r = 1;
  std::size_t trunc = 10;
  /// Subset of {conditions, zseries, invariants, gtsec, dualizing}.
  std::set<std::string> checks;
  ReportFormat format = ReportFormat::Text;
};

/// Parses a comma-separated check list; throws ParseError on unknown names.
std::set<std::string> parse_checks(const std::string& list);

struct SeriesRow {
  std::int64_t n;
  Integer h0;
  Integer chi;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
  std::string tag;
};

struct Report {
  // Context echo.
  std::string surface;
  std::string divisor;
  std::int64_t r = 1;
  std::size_t trunc = 0;
  Integer genus;
  Integer self_intersection;
  Integer canonical_degree;  ///< L.K
  Integer euler_characteristic;
  std::optional<Integer> dim;
  std::optional<CohomologyTable> cohomology;  ///< absent on blowups
  std::optional<Integer> h0;

  std::string branch = "NotEffective";
  std::optional<std::string> numerator;
  std::optional<std::string> denominator;
  std::optional<std::string> decomposition;
  std::string series_tag;
  std::vector<SeriesRow> series;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Builds the report. Throws ParseError, UnsupportedBranch, CapExceeded or
/// std::invalid_argument for unusable input.
Report run_report(const ReportConfig& cfg);

std::string render(const Report& report, ReportFormat format);

/// Process exit status: 0 pass, 1 failed check, 2 parse/usage, 3 unsupported
/// branch, 4 cap exceeded.
int exit_code_for(const Report& report);

}  // namespace ratsurf
