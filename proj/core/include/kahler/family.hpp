#pragma once

#include <cmath>
#include <string>

namespace kahler {

/// One member of the metric family: potential parameters alpha, beta and
/// complex dimension n of C^n.
///
/// Admissible members satisfy alpha > beta >= 0 and n >= 2. `make` enforces
/// this; `unchecked` exists so that reporting code can describe (and
/// witness) an inadmissible request instead of refusing to look at it.
struct FamilyParams {
  double alpha = 2.0;
  double beta = 0.0;
  int dim = 2;

  static FamilyParams make(double alpha, double beta, int dim);
  static constexpr FamilyParams unchecked(double alpha, double beta, int dim) {
    return FamilyParams{alpha, beta, dim};
  }

  /// Empty when admissible, otherwise a description of every violated invariant.
  std::string violations() const;
  bool admissible() const { return violations().empty(); }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws std::domain_error naming the violated invariants.
void require_admissible(const FamilyParams& params);

/// Log-radial coordinate u = ln(1 + r^2). Holds u >= 0.
class LogRadius {
 public:
  constexpr LogRadius() = default;
  explicit LogRadius(double u);

  static LogRadius from_x(double x) { return LogRadius(std::log1p(x)); }
  static LogRadius from_r(double r) { return LogRadius(std::log1p(r * r)); }

  constexpr double u() const { return u_; }
  /// x = r^2 = e^u - 1 (inf once u exceeds ~709).
  double x() const { return std::expm1(u_); }
  /// e^{-u} = 1/(1+x), never overflows.
  double t() const { return std::exp(-u_); }
  /// 1 - e^{-u} = x/(1+x).
  double one_minus_t() const { return -std::expm1(-u_); }
  double y(const FamilyParams& p) const { return p.alpha + u_; }

  friend constexpr auto operator<=>(const LogRadius&, const LogRadius&) = default;

 private:
  double u_ = 0.0;
};

}  // namespace kahler
