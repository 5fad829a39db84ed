#include "kahler/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kahler/appendix.hpp"
#include "kahler/curvature.hpp"
#include "kahler/geometry.hpp"
#include "kahler/radial_potential.hpp"

namespace kahler {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
    case Condition::IV: return "iv";
    case Condition::V: return "v";
    case Condition::HSC: return "hsc";
  }
  return "?";
}

std::string_view to_string(AppendixFunction f) {
  switch (f) {
    case AppendixFunction::G: return "G";
    case AppendixFunction::G2: return "G2";
    case AppendixFunction::H: return "H";
    case AppendixFunction::H2: return "H2";
    case AppendixFunction::I: return "I";
    case AppendixFunction::In: return "I_n";
  }
  return "?";
}

bool ConditionReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.passed; });
}

const ConditionVerdict& ConditionReport::verdict(Condition c) const {
  return verdicts[static_cast<std::size_t>(c)];
}

std::vector<LogRadius> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("log_grid: need 0 < lo < hi and count >= 2");
  }
  std::vector<LogRadius> g;
  g.reserve(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    g.emplace_back(i == 0 ? lo : i + 1 == count ? hi : std::exp(a + f * (b - a)));
  }
  return g;
}

std::vector<LogRadius> linear_grid(double lo, double hi, std::size_t count) {
  if (!(lo >= 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("linear_grid: need 0 <= lo < hi and count >= 2");
  }
  std::vector<LogRadius> g;
  g.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    g.emplace_back(i + 1 == count ? hi : lo + f * (hi - lo));
  }
  return g;
}

namespace {

class Tally {
 public:
  Tally(ConditionReport& rep, const CheckOptions& opt) : rep_(rep), opt_(opt) {
    for (Condition c : kAllConditions) {
      auto& v = rep_.verdicts[static_cast<std::size_t>(c)];
      v.condition = c;
      v.margin = ScaledReal(std::numeric_limits<double>::infinity(), 0.0);
    }
  }

  // `want` is the required sign; `noise` bounds the rounding error of `value`.
  void check(Condition c, double u, const ScaledReal& value, const ScaledReal& noise, int want,
             double natural_scale, std::string_view what) {
    auto& v = rep_.verdicts[static_cast<std::size_t>(c)];
    ++v.checked;
    const ScaledReal natural = value.abs() * ScaledReal(1.0, natural_scale);
    if (natural < v.margin) v.margin = natural;
    const bool strict = value.abs() > noise.abs() * opt_.strict_eps;
    if (value.sign() == want && strict) return;
    fail(c, u, value, what);
  }

  void fail(Condition c, double u, const ScaledReal& value, std::string_view what) {
    auto& v = rep_.verdicts[static_cast<std::size_t>(c)];
    v.passed = false;
    if (counts_[static_cast<std::size_t>(c)]++ < opt_.max_witnesses_per_condition) {
      rep_.witnesses.push_back({c, u, value, std::string(what)});
    }
  }

 private:
  ConditionReport& rep_;
  const CheckOptions& opt_;
  std::array<std::size_t, 6> counts_{};
};

// Portable uniform draw in (0, 1].
double unit_open_closed(std::mt19937_64& rng) {
  return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ConditionReport check_conditions(const FamilyParams& params, std::span<const LogRadius> grid,
                                 const CheckOptions& opt) {
  require_admissible(params);
  if (grid.empty()) throw std::invalid_argument("check_conditions: empty grid");
  if (opt.samples == 0) throw std::invalid_argument("check_conditions: samples >= 1 required");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      throw std::invalid_argument("check_conditions: grid must be strictly increasing");
    }
  }

  ConditionReport rep;
  rep.params = params;
  rep.grid.assign(grid.begin(), grid.end());
  Tally tally(rep, opt);
  std::mt19937_64 rng(opt.seed);

  for (const LogRadius& u : grid) {
    const double w = u.u();
    const PotentialJet j = jet(params, u);
    tally.check(Condition::I, w, j.f1, j.f1, +1, w, "f' <= 0");
    tally.check(Condition::I, w, j.phi, j.phi, +1, w, "f' + x f'' <= 0");

    const CurvatureScalars sc = abc(params, u);
    tally.check(Condition::III, w, sc.A, sc.A_noise, -1, 2.0 * w, "A = f'' >= 0");
    tally.check(Condition::IV, w, sc.K, sc.K_noise, -1, 2.0 * w, "2A+4B+C >= 0");
    if (radial_log_expr(params, u).sign() != sc.K.sign()) {
      tally.fail(Condition::IV, w, sc.K, "sign differs from radial_log_expr");
    }
    tally.check(Condition::V, w, sc.AB, sc.AB_noise, -1, 2.0 * w, "A+B >= 0");
    if (w > 0.0 && condition_v_expr(params, u).sign() != sc.AB.sign()) {
      tally.fail(Condition::V, w, sc.AB, "sign differs from condition_v_expr");
    }

    for (std::size_t k = 0; k < opt.samples; ++k) {
      const double p = 10.0 * unit_open_closed(rng);
      const double s = 10.0 * unit_open_closed(rng);
      const ScaledReal q = hsc_form(sc, p, s);
      const ScaledReal noise = sc.K_noise * (p * p) + sc.AB_noise * (4.0 * p * s) +
                               sc.A_noise * (2.0 * s * s);
      tally.check(Condition::HSC, w, q, noise, +1, 2.0 * w, "holomorphic sectional curvature <= 0");
    }
  }

  // (ii): rho increases along the grid and approaches its divergent law.
  {
    auto& v = rep.verdicts[static_cast<std::size_t>(Condition::II)];
    LogRadius prev(0.0);
    for (const LogRadius& u : grid) {
      if (u.u() > prev.u()) {
        const double d = geodesic_distance_between(params, prev, u).value;
        ++v.checked;
        if (!(d > 0.0)) tally.fail(Condition::II, u.u(), ScaledReal(d), "rho not increasing");
      }
      prev = u;
    }
    const double probe = std::max(opt.completeness_probe_u, 1.0);
    const double ratio = completeness_ratio(params, LogRadius(probe));
    const double dev = std::fabs(ratio - 1.0);
    ++v.checked;
    v.margin = ScaledReal(dev);
    if (!(dev <= opt.completeness_tol)) {
      tally.fail(Condition::II, probe, ScaledReal(ratio), "completeness ratio away from 1");
    }
    std::ostringstream note;
    note << "consistent with divergence: rho increasing on grid; rho(u) / leading law = " << ratio
         << " at u=" << probe << " (not a proof)";
    rep.completeness_note = v.passed ? note.str() : "not consistent with the predicted divergence rate";
  }
  return rep;
}

AppendixScan scan_appendix(const FamilyParams& params, AppendixFunction fn,
                           std::span<const double> points, int order) {
  require_admissible(params);
  if (points.empty()) throw std::invalid_argument("scan_appendix: no points");
  AppendixScan scan;
  scan.params = params;
  scan.function = fn;
  scan.order = order;
  scan.points = points.size();
  scan.domain_lo = *std::min_element(points.begin(), points.end());
  scan.domain_hi = *std::max_element(points.begin(), points.end());
  const bool on_x = fn == AppendixFunction::G || fn == AppendixFunction::G2;
  if (on_x ? scan.domain_lo < 0.0 : scan.domain_lo < params.alpha) {
    throw std::domain_error(on_x ? "scan_appendix: G scans need x >= 0"
                                 : "scan_appendix: H, I scans need y >= alpha");
  }

  bool first = true;
  bool above = true;
  for (double pt : points) {
    ScaledReal v;
    switch (fn) {
      case AppendixFunction::G: v = appendix_G(params, pt); break;
      case AppendixFunction::G2: v = appendix_G2(params, pt); break;
      case AppendixFunction::H: v = appendix_H(params, pt); break;
      case AppendixFunction::H2: v = appendix_H2(params, pt); break;
      case AppendixFunction::I: v = appendix_I(params, pt); break;
      case AppendixFunction::In: {
        v = appendix_In(params, pt, order);
        const double bound = appendix_In_lower_bound(params, pt, order);
        if (!(v > ScaledReal(bound))) above = false;
        break;
      }
    }
    if (first || v < scan.min_value) {
      scan.min_value = v;
      scan.argmin = pt;
      first = false;
    }
  }
  scan.positive = scan.min_value.sign() > 0;
  if (fn == AppendixFunction::In) scan.above_lower_bound = above;
  return scan;
}

std::vector<AppendixScan> appendix_suite(const FamilyParams& params, std::size_t points) {
  require_admissible(params);
  std::vector<double> xs{0.0};
  for (const auto& u : log_grid(1e-8, 1e6, points)) xs.push_back(u.u());
  const std::span<const double> xs_pos(xs.data() + 1, xs.size() - 1);

  std::vector<double> ys_open;
  for (const auto& w : log_grid(1e-6, 1e3, points)) ys_open.push_back(params.alpha + w.u());
  std::vector<double> ys_closed{params.alpha};
  ys_closed.insert(ys_closed.end(), ys_open.begin(), ys_open.end());

  std::vector<AppendixScan> out;
  out.push_back(scan_appendix(params, AppendixFunction::G, xs_pos));
  out.push_back(scan_appendix(params, AppendixFunction::G2, xs));
  out.push_back(scan_appendix(params, AppendixFunction::H, ys_open));
  out.push_back(scan_appendix(params, AppendixFunction::H2, ys_open));
  out.push_back(scan_appendix(params, AppendixFunction::I, ys_closed));
  const int n0 = find_n0(params.beta);
  for (int n = 1; n <= std::min(n0 + 2, 64); ++n) {
    AppendixScan s = scan_appendix(params, AppendixFunction::In, ys_closed, n);
    s.n0 = n0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace kahler
