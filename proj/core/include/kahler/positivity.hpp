#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kahler/family.hpp"
#include "kahler/scaled_real.hpp"

namespace kahler {

/// The five conditions on the potential plus the sampled quartic form.
///   i    f' > 0 and f' + x f'' > 0
///   ii   completeness (radial length diverges), evidenced numerically
///   iii  A < 0
///   iv   2A + 4B + C < 0, sign-matched with radial_log_expr
///   v    A + B < 0, sign-matched with condition_v_expr
///   hsc  holomorphic sectional curvature quartic > 0 on random (p, s)
enum class Condition { I, II, III, IV, V, HSC };
inline constexpr std::array<Condition, 6> kAllConditions{Condition::I,  Condition::II, Condition::III,
                                                         Condition::IV, Condition::V,  Condition::HSC};
std::string_view to_string(Condition c);

struct Witness {
  Condition condition;
  double u = 0.0;
  ScaledReal value;
  std::string note;
};

struct ConditionVerdict {
  Condition condition = Condition::I;
  bool passed = true;
  /// Smallest |value| seen, in natural units: times e^u for (i), e^{2u} otherwise.
  /// For (ii) the mantissa is |completeness_ratio - 1| at the probe point.
  ScaledReal margin;
  std::size_t checked = 0;
};

struct ConditionReport {
  FamilyParams params;
  std::vector<LogRadius> grid;
  std::array<ConditionVerdict, 6> verdicts;
  std::vector<Witness> witnesses;
  /// Condition (ii) can only ever be "consistent with divergence".
  std::string completeness_note;

  bool all_passed() const;
  const ConditionVerdict& verdict(Condition c) const;
};

struct CheckOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 20240917;
  /// A value passes when on the right side of zero by more than
  /// strict_eps times the magnitude of the terms that formed it.
  double strict_eps = 1e-14;
  /// |completeness_ratio(completeness_probe_u) - 1| allowed for (ii).
  double completeness_tol = 0.01;
  double completeness_probe_u = 1e5;
  std::size_t max_witnesses_per_condition = 5;
};

/// log-spaced grid lo..hi inclusive (lo > 0), `count` >= 2 points.
std::vector<LogRadius> log_grid(double lo, double hi, std::size_t count);
/// linearly spaced grid lo..hi inclusive.
std::vector<LogRadius> linear_grid(double lo, double hi, std::size_t count);

/// Throws std::domain_error for inadmissible params, std::invalid_argument
/// for an empty or non-increasing grid or samples == 0.
ConditionReport check_conditions(const FamilyParams& params, std::span<const LogRadius> grid,
                                 const CheckOptions& options = {});

enum class AppendixFunction { G, G2, H, H2, I, In };
std::string_view to_string(AppendixFunction f);

struct AppendixScan {
  FamilyParams params;
  AppendixFunction function = AppendixFunction::G;
  int order = 0;  // n for I_n
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  std::size_t points = 0;
  ScaledReal min_value;
  double argmin = 0.0;
  bool positive = false;
  /// For I_n scans: whether I_n(y) exceeded its lower bound at every point.
  std::optional<bool> above_lower_bound;
  std::optional<int> n0;
};

/// Evaluate `function` on `points` (x for G, G2; y for the rest) and record the
/// minimum. Points outside the natural domain are rejected.
AppendixScan scan_appendix(const FamilyParams& params, AppendixFunction function,
                           std::span<const double> points, int order = 0);

/// G, G2 on x in {0} and log (1e-8, 1e6]; H, H2 on y - alpha log [1e-6, 1e3];
/// I and I_n (n = 1 .. n0+2) on y in alpha + {0, log [1e-6, 1e3]}.
std::vector<AppendixScan> appendix_suite(const FamilyParams& params, std::size_t points = 200);

}  // namespace kahler
