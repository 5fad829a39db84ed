#include "kahler/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "detail/series.hpp"

namespace kahler {
namespace {

constexpr std::size_t kOrder = 40;
// Above this e^{w} is split off into the log scale.
constexpr double kExpSplit = 600.0;

double series_radius(const FamilyParams& p) { return std::min(0.25 * p.alpha, 0.5); }

void require_y(const FamilyParams& p, double y, const char* fn) {
  if (!(y >= p.alpha)) {
    std::ostringstream msg;
    msg << fn << ": y >= alpha required (got y=" << y << ", alpha=" << p.alpha << ")";
    throw std::domain_error(msg.str());
  }
}

double powy(double y, double p) { return p == 0.0 ? 1.0 : std::exp(p * std::log(y)); }

struct Term {
  double coef;
  bool has_exp;
  double power;
};

std::vector<Term> i_terms(const FamilyParams& p, int n) {
  const double a = p.alpha;
  const double b = p.beta;
  std::vector<Term> terms{{b * std::pow(a, b + 1.0), true, 0.0},
                          {1.0, true, b + 1.0},
                          {-b * (b + 1.0), false, b}};
  for (int step = 0; step < n; ++step) {
    std::vector<Term> next;
    auto add = [&next](double c, bool e, double pw) {
      if (c == 0.0) return;
      for (auto& t : next) {
        if (t.has_exp == e && t.power == pw) {
          t.coef += c;
          return;
        }
      }
      next.push_back({c, e, pw});
    };
    // y d/dy [c E^e y^p] = c e E y^{p+1} + c p E^e y^p, with E = e^{y-a}.
    for (const auto& t : terms) {
      if (t.has_exp) add(t.coef, true, t.power + 1.0);
      add(t.coef * t.power, t.has_exp, t.power);
    }
    terms = std::move(next);
  }
  return terms;
}

}  // namespace

double appendix_scale(const FamilyParams& p) {
  return std::max(1.0, std::pow(p.alpha, p.beta + 2.0));
}

double appendix_G(const FamilyParams& p, double x) {
  if (!(x > -1.0)) throw std::domain_error("appendix_G: x > -1 required");
  const double a = p.alpha;
  const double b = p.beta;
  const double u = std::log1p(x);
  if (std::fabs(u) < series_radius(p)) {
    using detail::Series;
    const double ab = std::pow(a, b);
    const Series e = Series::exp(kOrder);
    Series n = Series::shifted_power(a, ab, b, 1, kOrder);
    n[0] = 0.0;
    Series em1 = e;
    em1[0] = 0.0;
    const Series yb = Series::shifted_power(a, ab, b, 0, kOrder);
    return (e * n - em1 * yb * (b + 1.0))(u);
  }
  const double y = a + u;
  return powy(y, b + 1.0) * (1.0 + x) - (b + 1.0) * x * powy(y, b) -
         std::pow(a, b + 1.0) * (1.0 + x);
}

double appendix_G2(const FamilyParams& p, double x) {
  if (!(x > -1.0)) throw std::domain_error("appendix_G2: x > -1 required");
  const double a = p.alpha;
  const double b = p.beta;
  const double L = std::log1p(x);
  const double y = a + L;
  const double bracket = ((2.0 * a - b) + 2.0 * a * x) * L + a * (a - b) +
                         (a * a - b * b + b) * x + L * L * (1.0 + x);
  return (b + 1.0) * powy(y, b - 2.0) * bracket / ((1.0 + x) * (1.0 + x));
}

ScaledReal appendix_H(const FamilyParams& p, double y) {
  require_y(p, y, "appendix_H");
  const double a = p.alpha;
  const double b = p.beta;
  const double w = y - a;
  if (w < series_radius(p)) {
    using detail::Series;
    const double ab = std::pow(a, b);
    const double ab1 = ab * a;
    const Series e = Series::exp(kOrder);
    Series em1 = e;
    em1[0] = 0.0;
    const Series y1 = Series::shifted_power(a, ab, b, 1, kOrder);
    const Series y2 = Series::shifted_power(a, ab, b, 2, kOrder);
    Series ylin(kOrder);
    ylin[0] = ab1 * a;
    ylin[1] = ab1;
    const Series h = em1 * (b * ab1) - y2 + y1 * em1 + ylin;
    return {h(w), 0.0};
  }
  const double a1 = std::pow(a, b + 1.0);
  const double yb1 = powy(y, b + 1.0);
  if (w < kExpSplit) {
    // H = (e^w - 1)(b a^{b+1} + y^{b+1}) - y (y^{b+1} - a^{b+1})
    return {std::expm1(w) * (b * a1 + yb1) - y * (yb1 - a1), 0.0};
  }
  return ScaledReal(b * a1 + yb1, w) + ScaledReal(-b * a1 - y * yb1 - yb1 + a1 * y, 0.0);
}

ScaledReal appendix_H2(const FamilyParams& p, double y) {
  require_y(p, y, "appendix_H2");
  const double a = p.alpha;
  const double b = p.beta;
  const double w = y - a;
  const double a1 = std::pow(a, b + 1.0);
  const double yb = powy(y, b);
  const double ybm1 = powy(y, b - 1.0);
  const double c = b * (b + 1.0);
  if (w < kExpSplit) {
    const double e = std::exp(w);
    const double em1 = std::expm1(w);
    return {b * a1 * e + yb * (y * e - c) + ybm1 * em1 * c + 2.0 * yb * em1 * (b + 1.0), 0.0};
  }
  return ScaledReal(b * a1 + y * yb + c * ybm1 + 2.0 * (b + 1.0) * yb, w) +
         ScaledReal(-c * yb - c * ybm1 - 2.0 * (b + 1.0) * yb, 0.0);
}

ScaledReal appendix_I(const FamilyParams& p, double y) { return appendix_In(p, y, 0); }

ScaledReal appendix_In(const FamilyParams& p, double y, int n, int cap) {
  require_y(p, y, "appendix_In");
  if (n < 0 || n > cap) {
    std::ostringstream msg;
    msg << "appendix_In: order n=" << n << " outside [0, " << cap << "]";
    throw std::invalid_argument(msg.str());
  }
  const double w = y - p.alpha;
  double with_exp = 0.0;
  double plain = 0.0;
  for (const auto& t : i_terms(p, n)) {
    (t.has_exp ? with_exp : plain) += t.coef * powy(y, t.power);
  }
  if (w < kExpSplit) return {with_exp * std::exp(w) + plain, 0.0};
  return ScaledReal(with_exp, w) + ScaledReal(plain, 0.0);
}

double appendix_In_lower_bound(const FamilyParams& p, double y, int n) {
  const double b = p.beta;
  return powy(y, b) * b * (1.0 + b) * (std::pow(1.0 + b, n - 1) - std::pow(b, n));
}

int find_n0(double beta, int cap) {
  if (!(beta >= 0.0)) throw std::domain_error("find_n0: beta >= 0 required");
  if (beta <= 1.0) return 1;
  for (int n = 1; n <= cap; ++n) {
    if ((n - 1) * std::log1p(beta) >= n * std::log(beta)) return n;
  }
  std::ostringstream msg;
  msg << "find_n0: no n <= " << cap << " for beta=" << beta;
  throw std::out_of_range(msg.str());
}

}  // namespace kahler
