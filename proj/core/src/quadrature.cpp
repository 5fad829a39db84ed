#include "kahler/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>

namespace kahler {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureTolerance& tol) {
  if (a == b) return {};
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  double l1 = 0.0;
  // Boost's recursion compares an error estimate taken on the reference
  // interval [-1, 1] with a tolerance in the caller's units, so short intervals
  // bisect to max depth and the returned error is unscaled. On the unit
  // interval the two differ by a factor 2, which leaves the estimate
  // conservative. Ask for a little more than requested as well.
  const double width = b - a;
  auto g = [&](double t) { return width * f(a + width * t); };
  const double v =
      gauss_kronrod<double, 15>::integrate(g, 0.0, 1.0, tol.max_depth, tol.rel * 0.25, &err, &l1);
  QuadratureResult r{v, err};
  const double target = std::max(tol.abs, tol.rel * std::fabs(v));
  if (!std::isfinite(v) || err > target) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: value " << v
        << ", error estimate " << err << " > target " << target;
    throw QuadratureError(msg.str(), r);
  }
  return r;
}

}  // namespace kahler
