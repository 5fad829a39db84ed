#pragma once

#include <span>
#include <vector>

#include "kahler/family.hpp"
#include "kahler/quadrature.hpp"

namespace kahler {

/// Geodesic distance from the origin along a radial line,
///   rho(u) = int_0^u (1 + s/alpha)^{beta/2} / (2 sqrt(1 - e^{-s})) ds,
/// integrated in v = sqrt(s) to remove the 1/sqrt(s) endpoint singularity.
QuadratureResult geodesic_distance(const FamilyParams& params, LogRadius u,
                                   const QuadratureTolerance& tol = {1e-12, 1e-13, 24});

/// rho(u2) - rho(u1), same integrand.
QuadratureResult geodesic_distance_between(const FamilyParams& params, LogRadius u1, LogRadius u2,
                                           const QuadratureTolerance& tol = {1e-12, 1e-13, 24});

/// d rho / du.
double geodesic_speed(const FamilyParams& params, LogRadius u);

/// Volume of the geodesic ball of Euclidean radius r = sqrt(e^u - 1):
/// |S^{2n-1}| * int_0^u (1/2)(1+s/a)^b [N(s)/((b+1) a^b)]^{n-1} ds.
/// The e^s from dx = e^s ds cancels the e^{-s} in det g exactly.
QuadratureResult volume(const FamilyParams& params, LogRadius u,
                        const QuadratureTolerance& tol = {1e-12, 0.0, 24});

/// Exact antiderivative: |S^{2n-1}|/2 * N(u)^n / (n (b+1)^n a^{b n}).
double volume_closed(const FamilyParams& params, LogRadius u);

/// Area of the unit sphere S^d, d = 2n - 1 with n >= 2: 2 pi^n / (n-1)!.
double surface_area(int d);

/// u with |rho(u) - rho_target| <= 1e-8 (1 + rho_target). Throws
/// std::runtime_error if the bracket would have to grow past u = 1e7.
LogRadius invert_rho(const FamilyParams& params, double rho_target);

/// rho(u) alpha^{beta/2} (beta+2) / (alpha+u)^{(beta+2)/2}; tends to 1 as the
/// radial length integral diverges at the rate (ln r)^{(beta+2)/2}. u >= 1.
double completeness_ratio(const FamilyParams& params, LogRadius u);

struct ProfileRow {
  double u = 0.0;
  double rho = 0.0;
  double vol = 0.0;
  double scal = 0.0;
  double rho_err = 0.0;
  double vol_err = 0.0;
};

struct GeodesicProfile {
  FamilyParams params;
  std::vector<ProfileRow> rows;
};

/// Rows along an increasing grid. rho and vol are accumulated panel by panel
/// between consecutive grid points.
GeodesicProfile make_profile(const FamilyParams& params, std::span<const LogRadius> grid);

}  // namespace kahler
