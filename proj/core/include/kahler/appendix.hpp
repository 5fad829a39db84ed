#pragma once

#include "kahler/family.hpp"
#include "kahler/scaled_real.hpp"

namespace kahler {

// Auxiliary functions whose positivity carries conditions (iii) and (v).

/// G(x) = (a+L)^{b+1}(1+x) - (b+1) x (a+L)^b - a^{b+1}(1+x), L = ln(1+x).
/// Defined for x > -1; f''(x) = -G(x) / ((b+1) a^b x^2 (1+x)).
double appendix_G(const FamilyParams& params, double x);

/// G''(x) = (b+1)(a+L)^{b-2} [((2a-b) + 2a x) L + a(a-b) + (a^2-b^2+b) x + L^2 (1+x)] / (1+x)^2.
double appendix_G2(const FamilyParams& params, double x);

/// H(y) = b a^{b+1} e^{y-a} - b a^{b+1} - y^{b+2} + y^{b+1} e^{y-a} - y^{b+1} + a^{b+1} y,
/// y >= alpha. Carries log scale (y - alpha) once e^{y-a} leaves double range.
ScaledReal appendix_H(const FamilyParams& params, double y);
ScaledReal appendix_H2(const FamilyParams& params, double y);

/// I(y) = b a^{b+1} e^{y-a} + y^b (y e^{y-a} - b(b+1)), y >= alpha.
ScaledReal appendix_I(const FamilyParams& params, double y);

/// I_0 = I, I_n = y I_{n-1}'(y), by exact term-wise differentiation.
/// 0 <= n <= cap.
ScaledReal appendix_In(const FamilyParams& params, double y, int n, int cap = 64);

/// y^b b (1+b) [(1+b)^{n-1} - b^n], the lower bound for I_n on y >= alpha.
double appendix_In_lower_bound(const FamilyParams& params, double y, int n);

/// Smallest n >= 1 with (1+beta)^{n-1} >= beta^n, which makes the lower bound
/// nonnegative. Throws if none exists below `cap`.
int find_n0(double beta, int cap = 64);

/// Magnitude of the terms combined in G and H near their base point
/// (max(1, alpha^{beta+2})); used to scale "vanishes" tolerances.
double appendix_scale(const FamilyParams& params);

}  // namespace kahler
