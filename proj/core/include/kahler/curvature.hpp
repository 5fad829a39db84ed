#pragma once

#include "kahler/family.hpp"
#include "kahler/radial_potential.hpp"
#include "kahler/scaled_real.hpp"

namespace kahler {

/// The three curvature scalars on the line L = {z_i = 0, i > 1}:
///   A = f'',  B = x (f''' - f''^2 / f'),
///   C = x^2 f'''' - x (2 f'' + x f''')^2 / (f' + x f'') + 4 x f''^2 / f'.
///
/// Positivity of holomorphic sectional curvature only ever needs A, A+B and
/// 2A+4B+C, and the last two are small differences of the first. They are
/// therefore stored directly (`AB`, `K`); B and C are derived on request.
/// Each stored quantity comes with `*_noise`, the magnitude of the terms
/// combined to form it, which bounds its rounding error.
struct CurvatureScalars {
  LogRadius u;
  int dim = 2;
  ScaledReal A;
  ScaledReal AB;  // A + B
  ScaledReal K;   // 2A + 4B + C
  ScaledReal A_noise;
  ScaledReal AB_noise;
  ScaledReal K_noise;

  ScaledReal B() const { return AB - A; }
  ScaledReal C() const { return K - 2.0 * A - 4.0 * B(); }
};

/// Cancellation-aware A, A+B, 2A+4B+C, valid for all u >= 0 (u = 0 by limits).
CurvatureScalars abc(const FamilyParams& params, LogRadius u);

/// A, B, C straight from their definitions applied to the jet. Loses
/// accuracy in A+B and 2A+4B+C once u grows past ~10; kept as an
/// independent route for cross-checks.
CurvatureScalars abc_direct(const FamilyParams& params, LogRadius u);

/// (1/4r) d/dr (r d/dr ln(f' + r^2 f'')) in closed form:
/// -(alpha(alpha-beta) + beta x + (2alpha-beta) u + u^2) / ((1+x)^2 (alpha+u)^2).
ScaledReal radial_log_expr(const FamilyParams& params, LogRadius u);

/// The closed form -H(y) / (y^{-beta} x (1+x)^2 (y^{beta+1} - alpha^{beta+1})),
/// y = alpha + u. Same sign as A+B; their ratio is alpha^beta * y. Requires u > 0.
ScaledReal condition_v_expr(const FamilyParams& params, LogRadius u);

struct TensorIndex {
  int j = 1;
  int k = 1;
  int l = 1;
  int m = 1;
};

/// R_{j kbar l mbar} on L (1-based indices, each in [1, dim]).
ScaledReal curvature_component(const CurvatureScalars& s, TensorIndex idx);

/// Holomorphic sectional curvature quartic in terms of p = |a_1|^2 and
/// s = sum_{j>=2} |a_j|^2:  -(2A+4B+C) p^2 - 4(A+B) p s - 2A s^2.
ScaledReal hsc_form(const CurvatureScalars& scalars, double p, double s);

/// Diagonal Ricci components on L (off-diagonal ones vanish):
/// R11 = R_{1 1bar}, Rii = R_{i ibar} for i >= 2. Sign convention
/// R_{i jbar} = -d_i d_jbar ln det g, so both are positive for this family.
/// Log scale -u.
struct RicciPair {
  LogRadius u;
  ScaledReal R11;
  ScaledReal Rii;
};

RicciPair ricci_components(const FamilyParams& params, LogRadius u);

/// R = g^{1 1bar} R_{1 1bar} + (n-1) g^{i ibar} R_{i ibar}, with no extra
/// factor of 2 for the real scalar curvature.
double scalar_curvature(const FamilyParams& params, LogRadius u);

}  // namespace kahler
