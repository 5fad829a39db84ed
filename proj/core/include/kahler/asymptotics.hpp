#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kahler/family.hpp"
#include "kahler/geometry.hpp"

namespace kahler {

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  double u_lo = 0.0;
  double u_hi = 0.0;
  std::size_t n_points = 0;
  double predicted = 0.0;
  /// |slope - predicted| / |predicted|, or |slope| when predicted == 0.
  double rel_dev = 0.0;
};

/// Growth exponent of the geodesic-ball volume in rho: 2(beta+1) n / (beta+2).
double predicted_volume_exponent(const FamilyParams& params);
/// Decay exponent of the scalar curvature in rho: -2(beta+1) / (beta+2).
double predicted_curvature_exponent(const FamilyParams& params);

/// Ordinary least squares of ys on xs. Needs >= 8 points and strictly
/// increasing xs; throws std::invalid_argument otherwise (including zero
/// variance in xs).
ExponentFit fit_exponent(std::span<const double> xs, std::span<const double> ys, double predicted);

enum class Observable { Volume, ScalarCurvature, Distance };

/// ln Y against ln rho on a log-spaced window of u.
ExponentFit fit_window(const GeodesicProfile& profile, Observable y, double predicted);
ExponentFit fit_window(const FamilyParams& params, Observable y, double u_lo, double u_hi,
                       std::size_t points = 64);

/// ln Y against ln(alpha + u). Converges faster than the rho form; the
/// expected slopes are (beta+1) n for the volume, (beta+2)/2 for rho and
/// -(beta+1) for the scalar curvature.
ExponentFit fit_intermediate(const FamilyParams& params, Observable y, double u_lo, double u_hi,
                             std::size_t points = 64);

struct WindowDiagnostic {
  ExponentFit fit;
  /// rel_dev did not grow relative to the previous window.
  bool converging = true;
  /// rel_dev above the tolerance handed to convergence_diagnostics.
  bool pre_asymptotic = false;
};

/// Fits over >= 3 windows in order; flags any window whose rel_dev exceeds the
/// previous one, and windows still outside `tolerance`.
std::vector<WindowDiagnostic> convergence_diagnostics(std::span<const ExponentFit> fits,
                                                      double tolerance);
std::vector<WindowDiagnostic> convergence_diagnostics(
    const FamilyParams& params, Observable y, std::span<const std::pair<double, double>> windows,
    double tolerance, std::size_t points = 32);

}  // namespace kahler
