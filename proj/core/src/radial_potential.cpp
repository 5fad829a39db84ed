#include "kahler/radial_potential.hpp"

#include <boost/math/differentiation/finite_difference.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/series.hpp"

namespace kahler {
namespace {

constexpr std::size_t kSeriesOrder = 48;

// The Taylor branch is used for u below a quarter of the convergence radius
// of g = P/Q (branch point of P at u = -alpha, zeros of e^u - 1 at 2 pi i).
double series_threshold(const FamilyParams& p) {
  return 0.25 * std::min(p.alpha, 2.0 * std::numbers::pi);
}

UDerivatives series_branch(const FamilyParams& p, double u) {
  using detail::Series;
  const double ab = std::pow(p.alpha, p.beta);
  Series num = Series::shifted_power(p.alpha, ab, p.beta, 1, kSeriesOrder + 1);
  num[0] = 0.0;
  const Series pw = num.divided_by_w() * (1.0 / ((p.beta + 1.0) * ab));
  Series qw(kSeriesOrder + 1);
  double c = 1.0;
  for (std::size_t k = 0; k <= kSeriesOrder; ++k) {
    c /= static_cast<double>(k + 1);
    qw[k] = c;
  }
  const Series g = pw / qw;
  const double eu = std::exp(u);
  return {eu * g.derivative(0, u), eu * g.derivative(1, u), eu * g.derivative(2, u),
          eu * g.derivative(3, u)};
}

UDerivatives closed_branch(const FamilyParams& p, double u) {
  const double a = p.alpha;
  const double b = p.beta;
  const double y = a + u;
  const double ab = std::pow(a, b);
  const double ratio_b = std::exp(b * std::log1p(u / a));  // (y/a)^b
  const double P0 = potential_numerator(p, u) / ((b + 1.0) * ab);
  const double P1 = ratio_b;
  const double P2 = b * ratio_b / y;
  const double P3 = b * (b - 1.0) * ratio_b / (y * y);
  const double s = -std::expm1(-u);  // 1 - e^{-u}
  // Leibniz on g (e^u - 1) = P, scaled by e^u.
  const double g0 = P0 / s;
  const double g1 = (P1 - g0) / s;
  const double g2 = (P2 - g0 - 2.0 * g1) / s;
  const double g3 = (P3 - g0 - 3.0 * g1 - 3.0 * g2) / s;
  return {g0, g1, g2, g3};
}

double softplus(double v) { return v > 0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v)); }

}  // namespace

double potential_numerator(const FamilyParams& p, double u) {
  return std::pow(p.alpha, p.beta + 1.0) * std::expm1((p.beta + 1.0) * std::log1p(u / p.alpha));
}

double phi_scaled(const FamilyParams& p, LogRadius u) {
  return std::exp(p.beta * std::log1p(u.u() / p.alpha));
}

UDerivatives u_derivatives(const FamilyParams& params, LogRadius u) {
  require_admissible(params);
  return u.u() < series_threshold(params) ? series_branch(params, u.u())
                                          : closed_branch(params, u.u());
}

PotentialJet jet(const FamilyParams& params, LogRadius u) {
  const UDerivatives g = u_derivatives(params, u);
  const double w = u.u();
  PotentialJet j;
  j.u = u;
  j.f1 = ScaledReal(g[0], -w);
  j.f2 = ScaledReal(g[1], -2.0 * w);
  j.f3 = ScaledReal(g[2] - g[1], -3.0 * w);
  j.f4 = ScaledReal(g[3] - 3.0 * g[2] + 2.0 * g[1], -4.0 * w);
  j.phi = ScaledReal(phi_scaled(params, u), -w);
  return j;
}

QuadratureResult potential_value(const FamilyParams& params, LogRadius u,
                                 const QuadratureTolerance& tol) {
  require_admissible(params);
  if (u.u() == 0.0) return {};
  const double norm = 1.0 / ((params.beta + 1.0) * std::pow(params.alpha, params.beta));
  // f(x) = int_0^x f'(s) ds with s = e^w - 1: integrand e^w f'(e^w - 1) = P(w)/(1 - e^{-w}).
  auto integrand = [&](double w) {
    if (w <= 0.0) return 1.0;
    return norm * potential_numerator(params, w) / -std::expm1(-w);
  };
  return integrate(integrand, 0.0, u.u(), tol);
}

JetResidualReport fd_validate_jet(const FamilyParams& params, LogRadius u, double threshold) {
  require_admissible(params);
  JetResidualReport rep;
  rep.x = u.x();
  rep.threshold = threshold;
  rep.ill_conditioned = rep.x < 1e-3 || u.u() > 150.0;

  const double v0 = std::log(rep.x);
  const PotentialJet j0 = jet(params, u);
  const std::array<double, 4> closed{j0.f1.value(), j0.f2.value(), j0.f3.value(), j0.f4.value()};

  // d/dx = (1/x) d/dv with v = ln x; the FD step is then relative in x.
  for (int k = 0; k < 3; ++k) {
    auto entry = [&](double v) {
      const PotentialJet j = jet(params, LogRadius(softplus(v)));
      const std::array<double, 3> e{j.f1.value(), j.f2.value(), j.f3.value()};
      return e[static_cast<std::size_t>(k)];
    };
    const double fd = boost::math::differentiation::finite_difference_derivative(entry, v0) / rep.x;
    const double ref = closed[static_cast<std::size_t>(k) + 1];
    const double err = ref == 0.0 ? std::fabs(fd) : std::fabs(fd - ref) / std::fabs(ref);
    rep.rel_err[static_cast<std::size_t>(k)] = err;
    rep.max_rel_err = std::max(rep.max_rel_err, err);
  }
  rep.passed = !rep.ill_conditioned && rep.max_rel_err <= threshold;
  return rep;
}

}  // namespace kahler
