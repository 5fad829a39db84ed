#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kahler/family.hpp"

namespace kahler {

enum class RunMode { Verify, Profile, Fit, Appendix, All };
std::string_view to_string(RunMode m);
/// Throws std::invalid_argument for unknown names.
RunMode parse_run_mode(std::string_view name);

struct GridSpec {
  double lo = 1e-6;
  double hi = 1e4;
  std::size_t count = 200;
  bool log_spacing = true;
  /// Permits lo == 0, i.e. evaluation at the origin through the limit branches.
  bool limit_branch = false;
};

struct Tolerances {
  double strict_eps = 1e-14;
  double completeness = 0.01;
  double fd_rel = 1e-6;
  double volume_closed_rel = 1e-10;
  double volume_fit = 0.01;
  double curvature_fit = 0.02;
  double appendix_zero = 1e-10;

  /// Every gate tolerance times k (strict_eps is a rounding guard and is kept).
  Tolerances scaled(double k) const;
};

struct FitSpec {
  std::pair<double, double> volume_window{1e4, 1e5};
  std::pair<double, double> curvature_window{1e5, 1e6};
  std::size_t points = 48;
};

struct RunConfig {
  std::vector<FamilyParams> params;
  GridSpec grid;
  std::size_t samples = 100;
  std::uint64_t seed = 20240917;
  Tolerances tol;
  FitSpec fit;
  std::string out_dir = "out";
  RunMode mode = RunMode::All;
};

/// The standard suite: beta in {0, 0.5, 1, 2, 5}, alpha in {beta+0.25,
/// beta+1, 2beta+2}, n in {2, 3, 5}.
std::vector<FamilyParams> default_suite();
RunConfig default_config();

struct ConfigDiagnostic {
  int line = 0;  // 1-based; 0 for whole-file problems
  std::string message;
  /// Well-formed input that violates a parameter invariant.
  bool semantic = false;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigDiagnostic> diags);
  const std::vector<ConfigDiagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<ConfigDiagnostic> diags_;
};

/// Parses the sectioned key=value format documented in docs/config.md.
/// Collects every problem before throwing ConfigError. A file with no
/// [params] entries runs the default suite.
RunConfig parse_config(std::string_view text);

struct ParsedConfig {
  RunConfig config;
  std::vector<ConfigDiagnostic> diagnostics;
  bool only_semantic() const;
};

/// Same grammar, but never throws. Complete triples that violate the family
/// invariants are kept in config.params so a run can report them as witnesses.
ParsedConfig parse_config_lenient(std::string_view text);

}  // namespace kahler
