#pragma once

#include <cmath>
#include <iosfwd>

namespace kahler {

/// A real number held as mantissa * exp(log_scale).
///
/// Most quantities in this library decay like e^{-k u} with u = ln(1+r^2)
/// reaching 10^6, far below the smallest double. The log scale carries the
/// structural exponential factor exactly (it is always assembled from u
/// itself), while the mantissa carries the slowly varying part. Values are
/// never silently renormalised, so two quantities built at the same scale
/// divide without touching exp().
class ScaledReal {
 public:
  constexpr ScaledReal() = default;
  constexpr ScaledReal(double mantissa, double log_scale = 0.0)  // NOLINT(google-explicit-constructor)
      : mantissa_(mantissa), log_scale_(log_scale) {}

  constexpr double mantissa() const { return mantissa_; }
  constexpr double log_scale() const { return log_scale_; }

  /// Plain double; may underflow to 0 or overflow to inf.
  double value() const { return mantissa_ == 0.0 ? 0.0 : mantissa_ * std::exp(log_scale_); }

  /// Mantissa re-expressed relative to exp(scale): value / exp(scale).
  double at_scale(double scale) const {
    return mantissa_ == 0.0 ? 0.0 : mantissa_ * std::exp(log_scale_ - scale);
  }

  int sign() const { return (mantissa_ > 0.0) - (mantissa_ < 0.0); }
  bool is_zero() const { return mantissa_ == 0.0; }

  /// ln|value|, -inf for zero.
  double log_abs() const;
  double log10_abs() const { return log_abs() / std::log(10.0); }

  ScaledReal abs() const { return {std::fabs(mantissa_), log_scale_}; }

  ScaledReal operator-() const { return {-mantissa_, log_scale_}; }
  ScaledReal& operator+=(const ScaledReal& rhs);
  ScaledReal& operator-=(const ScaledReal& rhs) { return *this += -rhs; }
  ScaledReal& operator*=(double k) {
    mantissa_ *= k;
    return *this;
  }

  friend ScaledReal operator+(ScaledReal a, const ScaledReal& b) { return a += b; }
  friend ScaledReal operator-(ScaledReal a, const ScaledReal& b) { return a -= b; }
  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    return {a.mantissa_ * b.mantissa_, a.log_scale_ + b.log_scale_};
  }
  friend ScaledReal operator*(ScaledReal a, double k) { return a *= k; }
  friend ScaledReal operator*(double k, ScaledReal a) { return a *= k; }
  friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    return {a.mantissa_ / b.mantissa_, a.log_scale_ - b.log_scale_};
  }

  /// Ordering by represented value.
  friend bool operator<(const ScaledReal& a, const ScaledReal& b);
  friend bool operator>(const ScaledReal& a, const ScaledReal& b) { return b < a; }

 private:
  double mantissa_ = 0.0;
  double log_scale_ = 0.0;
};

/// Quotient a/b as a plain double (exact scale cancellation when scales match).
inline double ratio(const ScaledReal& a, const ScaledReal& b) {
  const double m = a.mantissa() / b.mantissa();
  const double ds = a.log_scale() - b.log_scale();
  return ds == 0.0 ? m : m * std::exp(ds);
}

/// Relative difference |a-b| / max(|a|,|b|), scale-aware.
double rel_diff(const ScaledReal& a, const ScaledReal& b);

std::ostream& operator<<(std::ostream& os, const ScaledReal& x);

}  // namespace kahler
