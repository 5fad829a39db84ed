#include "kahler/curvature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kahler/appendix.hpp"

namespace kahler {
namespace {

// Below this u the Ricci closed forms lose digits to their 1/u poles and the
// jet route (backed by the Taylor branch) is used instead.
constexpr double kRicciJetBelow = 1e-3;
// Below this u A+B comes from the jet definitions; above it, from the
// reduced closed form whose 1/x term cancels near the origin.
constexpr double kAbJetBelow = 1.0;

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

CurvatureScalars abc(const FamilyParams& params, LogRadius u) {
  const UDerivatives g = u_derivatives(params, u);
  const double w = u.u();
  const double a = params.alpha;
  const double b = params.beta;
  const double y = a + w;
  const double s = u.one_minus_t();
  const double ph = phi_scaled(params, u);
  const double scale = -2.0 * w;

  CurvatureScalars out;
  out.u = u;
  out.dim = params.dim;
  out.A = {g[1], scale};
  out.A_noise = {std::fabs(g[0]) + ph, scale};

  if (w < kAbJetBelow) {
    const double d3 = g[2] - g[1];
    const double sq = g[1] * g[1] / g[0];
    out.AB = {g[1] + s * (d3 - sq), scale};
    out.AB_noise = {std::fabs(g[1]) + s * (std::fabs(g[2]) + std::fabs(g[1]) + sq), scale};
  } else {
    // A+B = phi_x - phi f''/f' reduces to
    // e^{2u}(A+B) = phi_hat [1/x - (y^{b+1} + b a^{b+1}) / (y N)].
    const double n = potential_numerator(params, w);
    const double a1 = std::pow(a, b + 1.0);
    const double m = (n + a1) + b * a1;  // y^{b+1} + b a^{b+1}
    const double inv_x = u.t() / s;
    const double q = m / (y * n);
    out.AB = {ph * (inv_x - q), scale};
    out.AB_noise = {ph * (inv_x + q), scale};
  }

  // 2A+4B+C = phi * d/dx (x d/dx ln phi), and with ln phi = b ln y - u + const
  // this is -phi_hat e^{-2u} [((y-b)/y) e^{-u} + (1-e^{-u}) b / y^2]; every
  // term has one sign.
  const ScaledReal bracket =
      ScaledReal((a - b + w) / y, -w) + ScaledReal(s * b / (y * y), 0.0);
  out.K = ScaledReal(-ph, scale) * bracket;
  out.K_noise = out.K.abs();
  return out;
}

CurvatureScalars abc_direct(const FamilyParams& params, LogRadius u) {
  const PotentialJet j = jet(params, u);
  const double w = u.u();
  const double scale = -2.0 * w;
  const double s = u.one_minus_t();
  // Mantissas of f^{(k)} at scale -k u; e^{2u} times each definition.
  const double d1 = j.f1.mantissa();
  const double d2 = j.f2.mantissa();
  const double d3 = j.f3.mantissa();
  const double d4 = j.f4.mantissa();
  const double ph = j.phi.mantissa();
  const double A = d2;
  const double B = s * (d3 - d2 * d2 / d1);
  const double lin = 2.0 * d2 + s * d3;
  const double C = s * s * d4 - s * lin * lin / ph + 4.0 * s * d2 * d2 / d1;

  CurvatureScalars out;
  out.u = u;
  out.dim = params.dim;
  out.A = {A, scale};
  out.AB = {A + B, scale};
  out.K = {2.0 * A + 4.0 * B + C, scale};
  out.A_noise = out.A.abs();
  out.AB_noise = {std::fabs(A) + std::fabs(B), scale};
  out.K_noise = {2.0 * std::fabs(A) + 4.0 * std::fabs(B) + std::fabs(C), scale};
  return out;
}

ScaledReal radial_log_expr(const FamilyParams& params, LogRadius u) {
  require_admissible(params);
  const double a = params.alpha;
  const double b = params.beta;
  const double w = u.u();
  const double y = a + w;
  // numerator * e^{-u} = [a(a-b) + (2a-b)u + u^2] e^{-u} + b (1 - e^{-u})
  const ScaledReal num = ScaledReal(a * (a - b) + (2.0 * a - b) * w + w * w, -w) +
                         ScaledReal(b * u.one_minus_t(), 0.0);
  return ScaledReal(-1.0 / (y * y), -w) * num;
}

ScaledReal condition_v_expr(const FamilyParams& params, LogRadius u) {
  require_admissible(params);
  const double w = u.u();
  if (!(w > 0.0)) throw std::domain_error("condition_v_expr: u > 0 required");
  const double y = params.alpha + w;
  const ScaledReal h = appendix_H(params, y);
  // y^{-b} x (1+x)^2 N = y^{-b} (1 - e^{-u}) e^{3u} N
  const double den = std::exp(-params.beta * std::log(y)) * u.one_minus_t() *
                     potential_numerator(params, w);
  return -(h * ScaledReal(1.0 / den, -3.0 * w));
}

ScaledReal curvature_component(const CurvatureScalars& sc, TensorIndex idx) {
  for (int v : {idx.j, idx.k, idx.l, idx.m}) {
    if (v < 1 || v > sc.dim) {
      std::ostringstream msg;
      msg << "curvature_component: index " << v << " outside [1, " << sc.dim << "]";
      throw std::out_of_range(msg.str());
    }
  }
  const auto [j, k, l, m] = idx;
  const int a_part = delta(j, k) * delta(l, m) + delta(j, m) * delta(l, k);
  const int b_part = delta(j, k) * delta(j, 1) * delta(l, m) + delta(j, m) * delta(j, 1) * delta(l, k) +
                     delta(l, m) * delta(l, 1) * delta(j, k) + delta(l, k) * delta(l, 1) * delta(j, m);
  const bool all_one = j == 1 && k == 1 && l == 1 && m == 1;
  if (all_one) return -sc.K;  // -(2A + 4B + C), kept exact
  return -(static_cast<double>(a_part) * sc.A + static_cast<double>(b_part) * sc.B());
}

ScaledReal hsc_form(const CurvatureScalars& sc, double p, double s) {
  if (!(p >= 0.0) || !(s >= 0.0)) {
    throw std::domain_error("hsc_form: p = |a_1|^2 and s = sum |a_j|^2 must be >= 0");
  }
  return -(sc.K * (p * p) + sc.AB * (4.0 * p * s) + sc.A * (2.0 * s * s));
}

RicciPair ricci_components(const FamilyParams& params, LogRadius u) {
  require_admissible(params);
  const double a = params.alpha;
  const double b = params.beta;
  const double n1 = params.dim - 1.0;
  const double w = u.u();
  const double y = a + w;
  const double t = u.t();
  const double s = u.one_minus_t();

  double r11 = 0.0;
  double rii = 0.0;
  if (w < kRicciJetBelow) {
    // R_{i jbar} = -d_i d_jbar D with D = ln det g = ln phi + (n-1) ln f'.
    const UDerivatives g = u_derivatives(params, u);
    const double q1 = g[1] / g[0];
    const double du = b / y - 1.0 + n1 * q1;
    const double duu = -b / (y * y) + n1 * (g[2] / g[0] - q1 * q1);
    rii = -du;
    r11 = -(t * du + s * duu);
  } else {
    // The displayed closed forms (with the -d dbar ln det g sign), scaled by e^u.
    const double n = potential_numerator(params, w);
    const double a1 = std::pow(a, b + 1.0);
    const double rho1 = (b + 1.0) * std::exp(b * std::log(y)) / n;
    const double q = ((n + a1) + b * a1) / (y * n);
    const double lead = (a - b + w) / y;  // 1 - b/y
    r11 = lead * t + b * s / (y * y) + n1 * rho1 * (s * q - t);
    rii = lead + n1 * (1.0 / s - rho1);
  }
  return {u, {r11, -w}, {rii, -w}};
}

double scalar_curvature(const FamilyParams& params, LogRadius u) {
  const RicciPair ric = ricci_components(params, u);
  const UDerivatives g = u_derivatives(params, u);
  const double ph = phi_scaled(params, u);
  // g^{1 1bar} = 1/phi, g^{i ibar} = 1/f'; the e^{-u} scales cancel.
  return ric.R11.mantissa() / ph + (params.dim - 1.0) * ric.Rii.mantissa() / g[0];
}

}  // namespace kahler
