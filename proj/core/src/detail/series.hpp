#pragma once

// Truncated Taylor series arithmetic used by the small-argument branches.

#include <cmath>
#include <cstddef>
#include <vector>

namespace kahler::detail {

class Series {
 public:
  explicit Series(std::size_t order) : c_(order, 0.0) {}
  explicit Series(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  std::size_t order() const { return c_.size(); }
  double& operator[](std::size_t k) { return c_[k]; }
  double operator[](std::size_t k) const { return c_[k]; }

  /// exp(w) about w = 0.
  static Series exp(std::size_t order) {
    Series s(order);
    double c = 1.0;
    for (std::size_t k = 0; k < order; ++k) {
      s[k] = c;
      c /= static_cast<double>(k + 1);
    }
    return s;
  }

  /// (alpha + w)^(beta + shift) about w = 0. Coefficient k is
  /// binom(beta+shift, k) * alpha^beta * alpha^(shift-k); alpha^beta is formed
  /// once and multiplied up by alpha so that series built with different
  /// shifts agree bit-for-bit where the exact values agree. shift >= 0.
  static Series shifted_power(double alpha, double alpha_pow_beta, double beta, int shift,
                              std::size_t order) {
    Series s(order);
    const double p = beta + shift;
    double binom = 1.0;
    double apow = alpha_pow_beta;
    for (int m = 0; m < shift; ++m) apow *= alpha;
    for (std::size_t k = 0; k < order; ++k) {
      s[k] = binom * apow;
      binom *= (p - static_cast<double>(k)) / static_cast<double>(k + 1);
      apow /= alpha;
    }
    return s;
  }

  Series operator+(const Series& o) const {
    Series r(*this);
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += o[k];
    return r;
  }
  Series operator-(const Series& o) const {
    Series r(*this);
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] -= o[k];
    return r;
  }
  Series operator*(double a) const {
    Series r(*this);
    for (auto& v : r.c_) v *= a;
    return r;
  }
  Series operator*(const Series& o) const {
    Series r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0.0) continue;
      for (std::size_t j = 0; i + j < c_.size(); ++j) r[i + j] += c_[i] * o[j];
    }
    return r;
  }
  /// Series quotient; o[0] must be nonzero.
  Series operator/(const Series& o) const {
    Series r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
      double acc = c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= o[j] * r[k - j];
      r[k] = acc / o[0];
    }
    return r;
  }
  /// Drop the constant term and divide by w (caller guarantees c_0 == 0).
  Series divided_by_w() const {
    Series r(c_.size());
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k];
    return r;
  }

  /// d-th derivative evaluated at w.
  double derivative(std::size_t d, double w) const {
    double acc = 0.0;
    for (std::size_t k = c_.size(); k-- > d;) {
      double fall = 1.0;
      for (std::size_t m = 0; m < d; ++m) fall *= static_cast<double>(k - m);
      acc = acc * w + fall * c_[k];
    }
    return acc;
  }
  double operator()(double w) const { return derivative(0, w); }

 private:
  std::vector<double> c_;
};

}  // namespace kahler::detail
