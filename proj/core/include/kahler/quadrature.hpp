#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace kahler {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

/// Thrown when adaptive quadrature cannot reach its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  const QuadratureResult& achieved() const { return achieved_; }

 private:
  QuadratureResult achieved_;
};

struct QuadratureTolerance {
  double rel = 1e-11;
  double abs = 0.0;
  unsigned max_depth = 24;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. The integrand is never
/// evaluated at the endpoints. Throws QuadratureError if the error estimate
/// exceeds max(abs, rel * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureTolerance& tol = {});

}  // namespace kahler
