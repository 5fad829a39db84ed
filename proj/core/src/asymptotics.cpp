#include "kahler/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "kahler/positivity.hpp"

namespace kahler {

double predicted_volume_exponent(const FamilyParams& p) {
  return 2.0 * (p.beta + 1.0) * p.dim / (p.beta + 2.0);
}

double predicted_curvature_exponent(const FamilyParams& p) {
  return -2.0 * (p.beta + 1.0) / (p.beta + 2.0);
}

ExponentFit fit_exponent(std::span<const double> xs, std::span<const double> ys, double predicted) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit_exponent: size mismatch");
  if (xs.size() < 8) throw std::invalid_argument("fit_exponent: at least 8 points required");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("fit_exponent: xs must be strictly increasing");
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_exponent: xs have zero variance");

  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.n_points = xs.size();
  fit.predicted = predicted;
  fit.rel_dev = predicted != 0.0 ? std::fabs(fit.slope - predicted) / std::fabs(predicted)
                                 : std::fabs(fit.slope);
  return fit;
}

namespace {

double observable_value(const ProfileRow& r, Observable y) {
  switch (y) {
    case Observable::Volume: return r.vol;
    case Observable::ScalarCurvature: return r.scal;
    case Observable::Distance: return r.rho;
  }
  return 0.0;
}

double predicted_for(const FamilyParams& p, Observable y) {
  switch (y) {
    case Observable::Volume: return predicted_volume_exponent(p);
    case Observable::ScalarCurvature: return predicted_curvature_exponent(p);
    case Observable::Distance: return 1.0;
  }
  return 0.0;
}

}  // namespace

ExponentFit fit_window(const GeodesicProfile& profile, Observable y, double predicted) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : profile.rows) {
    xs.push_back(std::log(r.rho));
    ys.push_back(std::log(observable_value(r, y)));
  }
  ExponentFit fit = fit_exponent(xs, ys, predicted);
  if (!profile.rows.empty()) {
    fit.u_lo = profile.rows.front().u;
    fit.u_hi = profile.rows.back().u;
  }
  return fit;
}

ExponentFit fit_window(const FamilyParams& params, Observable y, double u_lo, double u_hi,
                       std::size_t points) {
  const auto grid = log_grid(u_lo, u_hi, points);
  return fit_window(make_profile(params, grid), y, predicted_for(params, y));
}

ExponentFit fit_intermediate(const FamilyParams& params, Observable y, double u_lo, double u_hi,
                             std::size_t points) {
  const auto grid = log_grid(u_lo, u_hi, points);
  const GeodesicProfile prof = make_profile(params, grid);
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : prof.rows) {
    xs.push_back(std::log(params.alpha + r.u));
    ys.push_back(std::log(observable_value(r, y)));
  }
  double predicted = 0.0;
  switch (y) {
    case Observable::Volume: predicted = (params.beta + 1.0) * params.dim; break;
    case Observable::ScalarCurvature: predicted = -(params.beta + 1.0); break;
    case Observable::Distance: predicted = 0.5 * (params.beta + 2.0); break;
  }
  ExponentFit fit = fit_exponent(xs, ys, predicted);
  fit.u_lo = u_lo;
  fit.u_hi = u_hi;
  return fit;
}

std::vector<WindowDiagnostic> convergence_diagnostics(std::span<const ExponentFit> fits,
                                                      double tolerance) {
  if (fits.size() < 3) throw std::invalid_argument("convergence_diagnostics: >= 3 windows required");
  std::vector<WindowDiagnostic> out;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    WindowDiagnostic d{fits[i], true, fits[i].rel_dev > tolerance};
    if (i > 0 && fits[i].rel_dev > fits[i - 1].rel_dev) d.converging = false;
    out.push_back(d);
  }
  return out;
}

std::vector<WindowDiagnostic> convergence_diagnostics(
    const FamilyParams& params, Observable y, std::span<const std::pair<double, double>> windows,
    double tolerance, std::size_t points) {
  std::vector<ExponentFit> fits;
  for (const auto& [lo, hi] : windows) fits.push_back(fit_window(params, y, lo, hi, points));
  return convergence_diagnostics(fits, tolerance);
}

}  // namespace kahler
