#pragma once

// Independent oracles for the tests: direct closed forms in long double and
// Richardson-extrapolated central differences. None of this calls into the
// library's derivative code.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "kahler/curvature.hpp"
#include "kahler/family.hpp"

namespace kahler::test {

using ld = long double;

// f'(x) straight from its definition, x = e^u - 1.
inline ld fprime(const FamilyParams& p, ld u) {
  const ld a = p.alpha;
  const ld b = p.beta;
  const ld num = std::pow(a, b + 1) * std::expm1((b + 1) * std::log1p(u / a));
  return num / ((b + 1) * std::pow(a, b) * std::expm1(u));
}

// Five-point central difference, then one Richardson step (h, h/2).
inline ld fd1(const std::function<ld(ld)>& f, ld x, ld h) {
  auto d = [&](ld s) { return (f(x - 2 * s) - 8 * f(x - s) + 8 * f(x + s) - f(x + 2 * s)) / (12 * s); };
  const ld coarse = d(h);
  const ld fine = d(h / 2);
  return fine + (fine - coarse) / 15;
}

inline ld fd2(const std::function<ld(ld)>& f, ld x, ld h) {
  auto d = [&](ld s) {
    return (-f(x - 2 * s) + 16 * f(x - s) - 30 * f(x) + 16 * f(x + s) - f(x + 2 * s)) / (12 * s * s);
  };
  const ld coarse = d(h);
  const ld fine = d(h / 2);
  return fine + (fine - coarse) / 15;
}

// f'' at x = e^v by differentiating f' in v = ln x: f'' = (1/x) d f'/dv.
inline ld fsecond_fd(const FamilyParams& p, ld u) {
  const ld v = std::log(std::expm1(u));
  auto g = [&](ld w) { return fprime(p, std::log1p(std::exp(w))); };
  return fd1(g, v, 1e-3L) / std::exp(v);
}

// D = (n-1) ln f' + ln phi as a function of v = ln x. Ricci on the line is
// R_{i ibar} = -D'(x) = -D_v / x and R_{1 1bar} = -(x D')' = -D_vv / x.
inline ld ricci_D(const FamilyParams& p, ld v) {
  const ld a = p.alpha;
  const ld b = p.beta;
  const ld u = v > 40 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v));
  const ld lnN = (b + 1) * std::log(a) + std::log(std::expm1((b + 1) * std::log1p(u / a)));
  const ld ln_fprime = lnN - std::log(b + 1) - b * std::log(a) - v;
  const ld ln_phi = b * std::log1p(u / a) - u;
  return (p.dim - 1) * ln_fprime + ln_phi;
}

struct RicciOracle {
  ld R11_scaled;  // e^u R_{1 1bar}
  ld Rii_scaled;  // e^u R_{i ibar}
};

inline RicciOracle ricci_fd(const FamilyParams& p, ld u) {
  const ld v = std::log(std::expm1(u));
  auto D = [&](ld w) { return ricci_D(p, w); };
  const ld s = -std::expm1(-u);  // x / (1 + x)
  const ld h = 2e-3L;
  return {-fd2(D, v, h) / s, -fd1(D, v, h) / s};
}

// Sum over all n^4 index tuples of R_{j kbar l mbar} a_j conj(a_k) a_l conj(a_m),
// each component taken relative to exp(log_scale).
inline double full_contraction(const CurvatureScalars& sc, const std::vector<std::complex<double>>& a,
                               double log_scale = 0.0) {
  const int n = static_cast<int>(a.size());
  std::complex<double> total = 0.0;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          const double r = curvature_component(sc, {j, k, l, m}).at_scale(log_scale);
          if (r == 0.0) continue;
          total += r * a[j - 1] * std::conj(a[k - 1]) * a[l - 1] * std::conj(a[m - 1]);
        }
  return total.real();
}

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

}  // namespace kahler::test
