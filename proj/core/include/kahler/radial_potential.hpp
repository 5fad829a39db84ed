#pragma once

#include <array>

#include "kahler/family.hpp"
#include "kahler/quadrature.hpp"
#include "kahler/scaled_real.hpp"

namespace kahler {

/// Derivative jet of the potential f at x = r^2 = e^u - 1.
///
/// fk holds the k-th derivative f^{(k)}(x) with log scale -k*u, so the
/// mantissa is (1+x)^k f^{(k)}(x), which stays O(poly(u)) for all u.
/// phi = f' + x f'' carries log scale -u.
struct PotentialJet {
  LogRadius u;
  ScaledReal f1;
  ScaledReal f2;
  ScaledReal f3;
  ScaledReal f4;
  ScaledReal phi;
};

/// u-derivatives of g(u) = f'(x(u)), scaled by e^u: entry k is e^u g^{(k)}(u).
/// The x-jet follows from d/dx = e^{-u} d/du; exposed because several curvature
/// quantities are shortest in this form.
using UDerivatives = std::array<double, 4>;

UDerivatives u_derivatives(const FamilyParams& params, LogRadius u);

/// Jet of f at u. Closed forms in u throughout; a Taylor branch near the
/// origin gives exact limits at u = 0 (f' -> 1, f'' -> -(alpha-beta)/(2 alpha)).
PotentialJet jet(const FamilyParams& params, LogRadius u);

/// e^u * phi = ((alpha+u)/alpha)^beta.
double phi_scaled(const FamilyParams& params, LogRadius u);

/// N(u) = (alpha+u)^{beta+1} - alpha^{beta+1}, accurate for small u.
double potential_numerator(const FamilyParams& params, double u);

/// f(x) itself by adaptive quadrature of f' (performed in ln(1+s)).
QuadratureResult potential_value(const FamilyParams& params, LogRadius u,
                                 const QuadratureTolerance& tol = {1e-10, 1e-10, 24});

struct JetResidualReport {
  double x = 0.0;
  /// Relative errors of f'', f''', f'''' against central differences of the
  /// next-lower jet entry.
  std::array<double, 3> rel_err{};
  double max_rel_err = 0.0;
  double threshold = 1e-6;
  bool ill_conditioned = false;
  bool passed = false;
};

/// Finite-difference check of the closed-form jet. Never throws for valid
/// params; requests outside x in [1e-3, ~e^150] are flagged ill-conditioned.
JetResidualReport fd_validate_jet(const FamilyParams& params, LogRadius u,
                                  double threshold = 1e-6);

}  // namespace kahler
