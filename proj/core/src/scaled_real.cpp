#include "kahler/scaled_real.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace kahler {

double ScaledReal::log_abs() const {
  if (mantissa_ == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::fabs(mantissa_)) + log_scale_;
}

ScaledReal& ScaledReal::operator+=(const ScaledReal& rhs) {
  if (rhs.mantissa_ == 0.0) return *this;
  if (mantissa_ == 0.0) return *this = rhs;
  if (rhs.log_scale_ == log_scale_) {
    mantissa_ += rhs.mantissa_;
  } else if (rhs.log_scale_ < log_scale_) {
    mantissa_ += rhs.mantissa_ * std::exp(rhs.log_scale_ - log_scale_);
  } else {
    mantissa_ = mantissa_ * std::exp(log_scale_ - rhs.log_scale_) + rhs.mantissa_;
    log_scale_ = rhs.log_scale_;
  }
  return *this;
}

bool operator<(const ScaledReal& a, const ScaledReal& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb;
  if (sa == 0) return false;
  // Same nonzero sign: compare magnitudes in the log domain.
  const double la = a.log_abs();
  const double lb = b.log_abs();
  return sa > 0 ? la < lb : la > lb;
}

double rel_diff(const ScaledReal& a, const ScaledReal& b) {
  const double s = std::max(a.log_scale(), b.log_scale());
  const double x = a.at_scale(s);
  const double y = b.at_scale(s);
  const double den = std::max(std::fabs(x), std::fabs(y));
  return den == 0.0 ? 0.0 : std::fabs(x - y) / den;
}

std::ostream& operator<<(std::ostream& os, const ScaledReal& x) {
  return os << x.mantissa() << "*e^(" << x.log_scale() << ")";
}

}  // namespace kahler
