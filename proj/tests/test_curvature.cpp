#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "kahler/curvature.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace kahler;
using test::rel_err;

namespace {

const FamilyParams kGrid[] = {FamilyParams::make(2, 0, 2),    FamilyParams::make(2, 1, 3),
                              FamilyParams::make(3, 0.5, 2),  FamilyParams::make(3, 2, 5),
                              FamilyParams::make(5.25, 5, 3), FamilyParams::make(0.25, 0, 4)};

}  // namespace

TEST_CASE("A, B, C match the 60-digit reference") {
  for (const auto& r : test::kReference) {
    const FamilyParams p = FamilyParams::make(r.alpha, r.beta, r.n);
    const CurvatureScalars sc = abc(p, LogRadius(r.u));
    const double s = -2.0 * r.u;
    const double A = sc.A.at_scale(s);
    const double B = sc.B().at_scale(s);
    const double C = sc.C().at_scale(s);
    // B and C come out of differences of O(|A|) terms.
    const double mag = std::fabs(r.abc[0]) + std::fabs(r.abc[1]) + std::fabs(r.abc[2]);
    CAPTURE(r.alpha);
    CAPTURE(r.beta);
    CAPTURE(r.u);
    CHECK(rel_err(A, r.abc[0]) < 1e-11);
    CHECK(std::fabs(B - r.abc[1]) < 1e-11 * mag);
    CHECK(std::fabs(C - r.abc[2]) < 1e-11 * mag);
    const CurvatureScalars d = abc_direct(p, LogRadius(r.u));
    CHECK(std::fabs(d.B().at_scale(s) - r.abc[1]) < 1e-9 * mag);
    CHECK(std::fabs(d.C().at_scale(s) - r.abc[2]) < 1e-9 * mag);
  }
}

TEST_CASE("limits at the origin") {
  const CurvatureScalars sc = abc(FamilyParams::make(2, 1, 2), LogRadius(0.0));
  CHECK(sc.A.value() == doctest::Approx(-0.25));
  CHECK(sc.AB.value() == doctest::Approx(-0.25));
  const CurvatureScalars near = abc(FamilyParams::make(2, 1, 2), LogRadius(1e-10));
  CHECK(near.AB.value() == doctest::Approx(-0.25).epsilon(1e-8));
  CHECK(radial_log_expr(FamilyParams::make(2, 0, 2), LogRadius(0.0)).value() == doctest::Approx(-1.0));
  CHECK_THROWS_AS(condition_v_expr(FamilyParams::make(2, 0, 2), LogRadius(0.0)), std::domain_error);
}

TEST_CASE("2A + 4B + C = phi * radial_log_expr") {
  for (const FamilyParams& p : kGrid) {
    for (double u = 1e-6; u <= 1e6; u *= 4.3) {
      const LogRadius lu(u);
      const ScaledReal rhs = jet(p, lu).phi * radial_log_expr(p, lu);
      CHECK(rel_diff(abc(p, lu).K, rhs) < 1e-8);
    }
  }
  CHECK(rel_diff(abc(FamilyParams::make(3, 0.5, 2), LogRadius(2.0)).K,
                 jet(FamilyParams::make(3, 0.5, 2), LogRadius(2.0)).phi *
                     radial_log_expr(FamilyParams::make(3, 0.5, 2), LogRadius(2.0))) < 1e-8);
}

TEST_CASE("radial_log_expr against a difference of ln phi") {
  // (1/4r) d/dr (r d/dr ln phi) = (1/x)... in v = ln x it is (d^2/dv^2 ln phi) / x.
  const FamilyParams p = FamilyParams::make(3, 2, 2);
  const double u = 5.0;
  auto ln_phi = [&](test::ld v) {
    const test::ld uu = std::log1p(std::exp(v));
    return p.beta * std::log1p(uu / p.alpha) - uu;
  };
  const test::ld v = std::log(std::expm1(test::ld(u)));
  const double want = static_cast<double>(test::fd2(ln_phi, v, 2e-3L) / std::exp(v));
  CHECK(rel_err(radial_log_expr(p, LogRadius(u)).value(), want) < 1e-6);
  CHECK(radial_log_expr(FamilyParams::make(2, 1, 2), LogRadius(1.0)).sign() < 0);
}

TEST_CASE("condition (v) expression: sign and its ratio to A + B") {
  // The ratio is alpha^beta (alpha + u); at beta = 0 it is alpha + u.
  CHECK(rel_err(kahler::ratio(condition_v_expr(FamilyParams::make(2, 0, 2), LogRadius(1.0)),
                              abc(FamilyParams::make(2, 0, 2), LogRadius(1.0)).AB),
                3.0) < 1e-10);
  for (const FamilyParams& p : kGrid) {
    for (double u : {1e-4, 0.5, 1.0, 5.0, 50.0, 1e3, 1e5}) {
      const LogRadius lu(u);
      const ScaledReal v = condition_v_expr(p, lu);
      const ScaledReal ab = abc(p, lu).AB;
      CHECK(v.sign() < 0);
      CHECK(v.sign() == ab.sign());
      const double want = std::pow(p.alpha, p.beta) * (p.alpha + u);
      CAPTURE(u);
      CHECK(rel_err(kahler::ratio(v, ab), want) < 1e-9);
    }
  }
}

TEST_CASE("curvature_component delta structure") {
  const CurvatureScalars sc = abc(FamilyParams::make(3, 1, 4), LogRadius(0.7));
  const double A = sc.A.value();
  const double B = sc.B().value();
  const double K = sc.K.value();
  CHECK(curvature_component(sc, {1, 1, 1, 1}).value() == doctest::Approx(-K));
  CHECK(curvature_component(sc, {2, 2, 3, 3}).value() == doctest::Approx(-A));
  CHECK(curvature_component(sc, {2, 2, 2, 2}).value() == doctest::Approx(-2 * A));
  CHECK(curvature_component(sc, {1, 2, 1, 2}).value() == 0.0);
  CHECK(curvature_component(sc, {1, 1, 2, 2}).value() == doctest::Approx(-(A + B)));
  CHECK(curvature_component(sc, {1, 2, 2, 1}).value() == doctest::Approx(-(A + B)));
  CHECK_THROWS_AS(curvature_component(sc, {0, 1, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(curvature_component(sc, {1, 1, 5, 1}), std::out_of_range);
}

TEST_CASE("curvature_component symmetries, exhaustive for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const CurvatureScalars sc = abc(FamilyParams::make(2.5, 1.5, n), LogRadius(1.3));
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m) {
            const double r = curvature_component(sc, {j, k, l, m}).value();
            CHECK(r == curvature_component(sc, {l, m, j, k}).value());
            CHECK(r == curvature_component(sc, {l, k, j, m}).value());
            CHECK(r == curvature_component(sc, {j, m, l, k}).value());
          }
  }
}

TEST_CASE("hsc_form: single-term cases and domain") {
  const CurvatureScalars sc = abc(FamilyParams::make(2, 0, 3), LogRadius(2.0));
  CHECK(hsc_form(sc, 0, 1).value() == doctest::Approx(-2 * sc.A.value()));
  CHECK(hsc_form(sc, 1, 0).value() == doctest::Approx(-sc.K.value()));
  CHECK(hsc_form(sc, 0, 1).sign() > 0);
  CHECK(hsc_form(sc, 1, 0).sign() > 0);
  CHECK_THROWS_AS(hsc_form(sc, -1, 0), std::domain_error);
  CHECK_THROWS_AS(hsc_form(sc, 0, -1e-3), std::domain_error);
}

TEST_CASE("full tensor contraction equals hsc_form") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> logu(-6.0, 4.0);
  std::uniform_int_distribution<int> dim(2, 5);
  std::uniform_int_distribution<int> pick(0, std::size(kGrid) - 1);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    FamilyParams p = kGrid[pick(rng)];
    p.dim = dim(rng);
    const double u = std::pow(10.0, logu(rng));
    const CurvatureScalars sc = abc(p, LogRadius(u));
    std::vector<std::complex<double>> a(p.dim);
    for (auto& z : a) z = {unit(rng), unit(rng)};
    double ps = std::norm(a[0]);
    double ss = 0.0;
    for (int i = 1; i < p.dim; ++i) ss += std::norm(a[i]);
    const double scale = -2.0 * u;
    const double got = test::full_contraction(sc, a, scale);
    const double want = hsc_form(sc, ps, ss).at_scale(scale);
    const double mag = std::fabs(sc.K.at_scale(scale)) + std::fabs(sc.AB.at_scale(scale)) + std::fabs(sc.A.at_scale(scale));
    worst = std::max(worst, std::fabs(got - want) / mag);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("Ricci components match the 60-digit reference") {
  for (const auto& r : test::kReference) {
    const FamilyParams p = FamilyParams::make(r.alpha, r.beta, r.n);
    const RicciPair ric = ricci_components(p, LogRadius(r.u));
    CAPTURE(r.alpha);
    CAPTURE(r.beta);
    CAPTURE(r.u);
    CHECK(rel_err(ric.R11.at_scale(-r.u), r.ricci[0]) < 1e-9);
    CHECK(rel_err(ric.Rii.at_scale(-r.u), r.ricci[1]) < 1e-9);
    CHECK(rel_err(scalar_curvature(p, LogRadius(r.u)), r.scal) < 1e-9);
  }
}

TEST_CASE("Ricci components against differences of ln det g") {
  for (const FamilyParams& p : kGrid) {
    for (double u : {1e-2, 0.1, 1.0, 7.0, 100.0}) {
      const RicciPair ric = ricci_components(p, LogRadius(u));
      const test::RicciOracle o = test::ricci_fd(p, u);
      CAPTURE(u);
      CHECK(rel_err(ric.R11.at_scale(-u), static_cast<double>(o.R11_scaled)) < 1e-6);
      CHECK(rel_err(ric.Rii.at_scale(-u), static_cast<double>(o.Rii_scaled)) < 1e-6);
    }
  }
}

TEST_CASE("Ricci is continuous across the small-u switch and finite at 0") {
  for (const FamilyParams& p : kGrid) {
    const RicciPair a = ricci_components(p, LogRadius(1e-3 * (1 - 1e-9)));
    const RicciPair b = ricci_components(p, LogRadius(1e-3 * (1 + 1e-9)));
    CHECK(rel_diff(a.R11, b.R11) < 1e-8);
    CHECK(rel_diff(a.Rii, b.Rii) < 1e-8);
    const double r0 = scalar_curvature(p, LogRadius(0.0));
    CHECK(std::isfinite(r0));
    CHECK(r0 > 0.0);
    CHECK(rel_err(scalar_curvature(p, LogRadius(1e-9)), r0) < 1e-7);
  }
}

TEST_CASE("scalar curvature is positive and decreasing for u >= 1") {
  for (const FamilyParams& p : kGrid) {
    double prev = scalar_curvature(p, LogRadius(1.0));
    for (double u = 1.5; u <= 1e6; u *= 1.5) {
      const double r = scalar_curvature(p, LogRadius(u));
      CHECK(r > 0.0);
      CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("beta = 0: R u tends to a positive constant") {
  const FamilyParams p = FamilyParams::make(2, 0, 2);
  const double c5 = scalar_curvature(p, LogRadius(1e5)) * 1e5;
  const double c6 = scalar_curvature(p, LogRadius(1e6)) * 1e6;
  CHECK(c6 > 0.0);
  CHECK(rel_err(c5, c6) < 1e-4);
}
