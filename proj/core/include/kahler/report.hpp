#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kahler/asymptotics.hpp"
#include "kahler/config.hpp"
#include "kahler/geometry.hpp"
#include "kahler/positivity.hpp"

namespace kahler {

inline constexpr int kReportSchemaVersion = 1;

std::string_view tool_version();

/// A pass/fail check with a tolerance. `u` is NaN when not tied to a point.
struct GatedCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  double u = 0.0;
  std::string detail;
};

struct FitRecord {
  std::string observable;  // "volume", "scalar_curvature"
  ExponentFit fit;
  double tolerance = 0.0;
  bool passed = false;
  /// ln Y vs ln(alpha+u) over the same window, recorded but not gated.
  std::optional<ExponentFit> intermediate;
};

struct ParamsResult {
  FamilyParams params;
  std::uint64_t seed = 0;
  /// Empty when admissible.
  std::string violations;
  std::optional<ConditionReport> conditions;
  std::vector<GatedCheck> checks;
  std::vector<FitRecord> fits;
  std::vector<AppendixScan> appendix;
  std::optional<GeodesicProfile> profile;
  /// Relative path of the emitted CSV, once written.
  std::string profile_file;
  /// Exceptions caught while evaluating this triple.
  std::vector<std::string> errors;

  bool passed() const;
};

struct RunReport {
  std::string version;
  std::string timestamp;
  std::uint64_t seed = 0;
  RunMode mode = RunMode::All;
  GridSpec grid;
  Tolerances tolerances;
  std::vector<ParamsResult> results;
  /// Config diagnostics carried into the report (lenient runs) and output failures.
  std::vector<ConfigDiagnostic> config_diagnostics;
  std::vector<std::string> output_errors;

  /// True iff every gated check of every triple passed and nothing failed
  /// to parse or to write.
  bool overall_pass() const;
};

/// Evaluates every params triple (concurrently; results keep config order).
/// Triple i uses seed config.seed + i. Inadmissible triples are not
/// evaluated; they fail with an "admissible" witness.
RunReport run(const RunConfig& config);

/// Columns: u,rho,vol,scal,cond_iii_value,cond_iv_value,cond_v_value. The
/// cond_* columns are A, 2A+4B+C and A+B multiplied by (1+r^2)^2 = e^{2u}.
/// Throws std::runtime_error if the file cannot be written.
void emit_csv(const GeodesicProfile& profile, const std::filesystem::path& path);

/// Schema documented in docs/report-schema.md.
std::string to_json(const RunReport& report, bool include_timestamp = true);
void emit_json(const RunReport& report, const std::filesystem::path& path);

/// Writes profile CSVs and report.json under `dir`. Failures are appended to
/// report.output_errors (so overall_pass turns false) and writing continues
/// with whatever is still possible.
void write_outputs(RunReport& report, const std::filesystem::path& dir);

}  // namespace kahler
