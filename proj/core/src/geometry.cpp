#include "kahler/geometry.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "kahler/curvature.hpp"
#include "kahler/radial_potential.hpp"

namespace kahler {
namespace {

// Distance integrand in v = sqrt(s): v (1 + v^2/a)^{b/2} / sqrt(1 - e^{-v^2}).
double distance_integrand_v(const FamilyParams& p, double v) {
  const double s = v * v;
  const double growth = std::exp(0.5 * p.beta * std::log1p(s / p.alpha));
  if (s < 1e-300) return growth;
  return v * growth / std::sqrt(-std::expm1(-s));
}

double volume_density(const FamilyParams& p, double s) {
  const double ab = std::pow(p.alpha, p.beta);
  const double lead = 0.5 * std::exp(p.beta * std::log1p(s / p.alpha));
  const double radial = potential_numerator(p, s) / ((p.beta + 1.0) * ab);
  return lead * std::pow(radial, p.dim - 1);
}

}  // namespace

QuadratureResult geodesic_distance(const FamilyParams& params, LogRadius u,
                                   const QuadratureTolerance& tol) {
  return geodesic_distance_between(params, LogRadius(0.0), u, tol);
}

QuadratureResult geodesic_distance_between(const FamilyParams& params, LogRadius u1, LogRadius u2,
                                           const QuadratureTolerance& tol) {
  require_admissible(params);
  auto f = [&params](double v) { return distance_integrand_v(params, v); };
  return integrate(f, std::sqrt(u1.u()), std::sqrt(u2.u()), tol);
}

double geodesic_speed(const FamilyParams& params, LogRadius u) {
  const double s = u.one_minus_t();
  return std::exp(0.5 * params.beta * std::log1p(u.u() / params.alpha)) / (2.0 * std::sqrt(s));
}

QuadratureResult volume(const FamilyParams& params, LogRadius u, const QuadratureTolerance& tol) {
  require_admissible(params);
  auto f = [&params](double s) { return volume_density(params, s); };
  QuadratureResult r = integrate(f, 0.0, u.u(), tol);
  const double area = surface_area(2 * params.dim - 1);
  return {r.value * area, r.error * area};
}

double volume_closed(const FamilyParams& params, LogRadius u) {
  require_admissible(params);
  const double n = params.dim;
  const double b = params.beta;
  const double ln_num = n * std::log(potential_numerator(params, u.u()));
  const double ln_den = std::log(n) + n * std::log(b + 1.0) + b * n * std::log(params.alpha);
  if (u.u() == 0.0) return 0.0;
  return 0.5 * surface_area(2 * params.dim - 1) * std::exp(ln_num - ln_den);
}

double surface_area(int d) {
  if (d < 3 || d % 2 == 0) {
    std::ostringstream msg;
    msg << "surface_area: expected odd d = 2n-1 >= 3 (got " << d << ")";
    throw std::invalid_argument(msg.str());
  }
  const int n = (d + 1) / 2;
  return 2.0 * std::pow(std::numbers::pi, n) / std::tgamma(static_cast<double>(n));
}

LogRadius invert_rho(const FamilyParams& params, double rho_target) {
  require_admissible(params);
  if (!(rho_target >= 0.0)) throw std::domain_error("invert_rho: rho_target >= 0 required");
  if (rho_target == 0.0) return LogRadius(0.0);

  constexpr double kMaxU = 1e7;
  auto rho = [&](double u) { return geodesic_distance(params, LogRadius(u)).value; };
  double hi = 1.0;
  while (rho(hi) < rho_target) {
    hi *= 4.0;
    if (hi > kMaxU) {
      std::ostringstream msg;
      msg << "invert_rho: target " << rho_target << " not bracketed below u = " << kMaxU;
      throw std::runtime_error(msg.str());
    }
  }
  // Leading-order inverse of rho ~ (a+u)^{(b+2)/2} / ((b+2) a^{b/2}) as a guess.
  const double b = params.beta;
  double guess = std::pow(rho_target * (b + 2.0) * std::pow(params.alpha, 0.5 * b), 2.0 / (b + 2.0)) -
                 params.alpha;
  guess = std::clamp(guess, 0.5 * std::min(hi, 1.0) * 1e-3, hi);

  auto fn = [&](double u) {
    const LogRadius lu(std::max(u, 1e-300));
    return std::make_pair(rho(lu.u()) - rho_target, geodesic_speed(params, lu));
  };
  std::uintmax_t iters = 200;
  const double u = boost::math::tools::newton_raphson_iterate(fn, guess, 0.0, hi, 48, iters);
  const double resid = std::fabs(rho(u) - rho_target);
  if (resid > 1e-8 * (1.0 + rho_target)) {
    std::ostringstream msg;
    msg << "invert_rho: residual " << resid << " at u=" << u << " exceeds tolerance";
    throw std::runtime_error(msg.str());
  }
  return LogRadius(u);
}

double completeness_ratio(const FamilyParams& params, LogRadius u) {
  if (u.u() < 1.0) throw std::domain_error("completeness_ratio: u >= 1 required");
  const double b = params.beta;
  const double rho = geodesic_distance(params, u).value;
  const double lead = std::exp(0.5 * (b + 2.0) * std::log(params.alpha + u.u()) -
                               0.5 * b * std::log(params.alpha)) /
                      (b + 2.0);
  return rho / lead;
}

GeodesicProfile make_profile(const FamilyParams& params, std::span<const LogRadius> grid) {
  require_admissible(params);
  GeodesicProfile prof{params, {}};
  prof.rows.reserve(grid.size());
  auto vol_f = [&params](double s) { return volume_density(params, s); };
  const double area = surface_area(2 * params.dim - 1);
  LogRadius prev(0.0);
  double rho = 0.0;
  double rho_err = 0.0;
  double vol = 0.0;
  double vol_err = 0.0;
  for (const LogRadius& u : grid) {
    if (u < prev) throw std::invalid_argument("make_profile: grid must be increasing");
    const QuadratureResult dr = geodesic_distance_between(params, prev, u);
    const QuadratureResult dv = integrate(vol_f, prev.u(), u.u(), {1e-12, 0.0, 24});
    rho += dr.value;
    rho_err += dr.error;
    vol += dv.value * area;
    vol_err += dv.error * area;
    prof.rows.push_back({u.u(), rho, vol, scalar_curvature(params, u), rho_err, vol_err});
    prev = u;
  }
  return prof;
}

}  // namespace kahler
