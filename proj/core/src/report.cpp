#include "kahler/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "kahler/appendix.hpp"
#include "kahler/curvature.hpp"
#include "kahler/radial_potential.hpp"

namespace kahler {

using nlohmann::ordered_json;

std::string_view tool_version() { return KAHLER_VERSION_STRING; }

bool ParamsResult::passed() const {
  if (!violations.empty() || !errors.empty()) return false;
  if (conditions && !conditions->all_passed()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  for (const auto& f : fits) {
    if (!f.passed) return false;
  }
  return true;
}

bool RunReport::overall_pass() const {
  if (results.empty() || !config_diagnostics.empty() || !output_errors.empty()) return false;
  return std::all_of(results.begin(), results.end(), [](const ParamsResult& r) { return r.passed(); });
}

namespace {

constexpr double kNoPoint = std::numeric_limits<double>::quiet_NaN();

bool wants(RunMode mode, RunMode part) { return mode == RunMode::All || mode == part; }

std::vector<LogRadius> make_grid(const GridSpec& g) {
  if (g.count == 1) return {LogRadius(g.lo)};
  return g.log_spacing ? log_grid(g.lo, g.hi, g.count) : linear_grid(g.lo, g.hi, g.count);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Fourth-order one-sided difference at the left end of the domain.
template <class F>
double forward_derivative(F&& f, double x0, double h) {
  return (-25.0 * f(x0) + 48.0 * f(x0 + h) - 36.0 * f(x0 + 2 * h) + 16.0 * f(x0 + 3 * h) -
          3.0 * f(x0 + 4 * h)) /
         (12.0 * h);
}

template <class F>
double central_derivative(F&& f, double x0, double h) {
  return (f(x0 - 2 * h) - 8.0 * f(x0 - h) + 8.0 * f(x0 + h) - f(x0 + 2 * h)) / (12.0 * h);
}

void verify_checks(const FamilyParams& p, const RunConfig& cfg, const Tolerances& tol,
                   std::span<const LogRadius> grid, std::uint64_t seed, ParamsResult& out) {
  CheckOptions opt;
  opt.samples = cfg.samples;
  opt.seed = seed;
  opt.strict_eps = tol.strict_eps;
  opt.completeness_tol = tol.completeness;
  out.conditions = check_conditions(p, grid, opt);

  for (double u : {0.1, 1.0, 5.0}) {
    const JetResidualReport r = fd_validate_jet(p, LogRadius(u), tol.fd_rel);
    out.checks.push_back({"jet_fd", r.max_rel_err <= tol.fd_rel, r.max_rel_err, tol.fd_rel, u,
                          "max relative error of f'', f''', f'''' against differences"});
  }

  const double top = std::max(1.0, cfg.grid.hi);
  for (double u : {1.0, 10.0, 100.0, 1e3, 1e4}) {
    if (u > top) break;
    const double q = volume(p, LogRadius(u)).value;
    const double c = volume_closed(p, LogRadius(u));
    const double rel = std::fabs(q - c) / std::fabs(c);
    out.checks.push_back({"volume_closed", rel <= tol.volume_closed_rel, rel, tol.volume_closed_rel, u,
                          "quadrature against the exact antiderivative"});
  }
}

void profile_checks(const FamilyParams& p, std::span<const LogRadius> grid, ParamsResult& out) {
  out.profile = make_profile(p, grid);
  const auto& rows = out.profile->rows;
  double worst_u = kNoPoint;
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].rho > rows[i - 1].rho && rows[i].vol > rows[i - 1].vol)) {
      monotone = false;
      worst_u = rows[i].u;
      break;
    }
  }
  out.checks.push_back({"profile_monotone", monotone, 0.0, 0.0, worst_u, "rho and vol strictly increasing"});

  double min_scal = std::numeric_limits<double>::infinity();
  double at = kNoPoint;
  for (const auto& r : rows) {
    if (r.scal < min_scal) {
      min_scal = r.scal;
      at = r.u;
    }
  }
  out.checks.push_back({"profile_scal_positive", min_scal > 0.0, min_scal, 0.0, at, "minimum scalar curvature"});
}

void fit_checks(const FamilyParams& p, const RunConfig& cfg, const Tolerances& tol, ParamsResult& out) {
  struct Spec {
    const char* name;
    Observable obs;
    std::pair<double, double> window;
    double tol;
  };
  const Spec specs[] = {{"volume", Observable::Volume, cfg.fit.volume_window, tol.volume_fit},
                        {"scalar_curvature", Observable::ScalarCurvature, cfg.fit.curvature_window, tol.curvature_fit}};
  for (const Spec& s : specs) {
    FitRecord rec;
    rec.observable = s.name;
    rec.fit = fit_window(p, s.obs, s.window.first, s.window.second, cfg.fit.points);
    rec.tolerance = s.tol;
    rec.passed = rec.fit.rel_dev <= s.tol;
    rec.intermediate = fit_intermediate(p, s.obs, s.window.first, s.window.second, cfg.fit.points);
    out.fits.push_back(std::move(rec));
  }
}

void appendix_checks(const FamilyParams& p, const Tolerances& tol, ParamsResult& out) {
  out.appendix = appendix_suite(p);
  for (const auto& s : out.appendix) {
    std::string name = "appendix_" + std::string(to_string(s.function));
    if (s.function == AppendixFunction::In) name += "_" + std::to_string(s.order);
    out.checks.push_back({name + "_positive", s.positive, s.min_value.value(), 0.0, s.argmin,
                          "minimum over the scan"});
    if (s.above_lower_bound) {
      out.checks.push_back({name + "_lower_bound", *s.above_lower_bound, 0.0, 0.0, kNoPoint,
                            "I_n above its lower bound on the scan"});
    }
  }

  const double a = p.alpha;
  const double limit = tol.appendix_zero * appendix_scale(p);
  const auto G = [&](double x) { return appendix_G(p, x); };
  const auto H = [&](double y) { return appendix_H(p, y).value(); };
  const double values[] = {appendix_G(p, 0.0), central_derivative(G, 0.0, 1e-3), H(a),
                           forward_derivative(H, a, 1e-3)};
  const char* names[] = {"appendix_G_at_0", "appendix_dG_at_0", "appendix_H_at_alpha", "appendix_dH_at_alpha"};
  for (int i = 0; i < 4; ++i) {
    out.checks.push_back({names[i], std::fabs(values[i]) <= limit, values[i], limit, kNoPoint,
                          "vanishes at the base point"});
  }
}

ParamsResult evaluate(const FamilyParams& p, std::uint64_t seed, const RunConfig& cfg, const Tolerances& tol) {
  ParamsResult out;
  out.params = p;
  out.seed = seed;
  out.violations = p.violations();
  if (!out.violations.empty()) return out;
  try {
    const std::vector<LogRadius> grid = make_grid(cfg.grid);
    if (wants(cfg.mode, RunMode::Verify)) verify_checks(p, cfg, tol, grid, seed, out);
    if (wants(cfg.mode, RunMode::Profile)) profile_checks(p, grid, out);
    if (wants(cfg.mode, RunMode::Fit)) fit_checks(p, cfg, tol, out);
    if (wants(cfg.mode, RunMode::Appendix)) appendix_checks(p, tol, out);
  } catch (const std::exception& e) {
    out.errors.emplace_back(e.what());
  }
  return out;
}

ordered_json scaled_json(const ScaledReal& v) {
  return {{"mantissa", v.mantissa()}, {"log_scale", v.log_scale()}};
}

ordered_json fit_json(const ExponentFit& f) {
  return {{"slope", f.slope},       {"intercept", f.intercept}, {"residual_rms", f.residual_rms},
          {"u_lo", f.u_lo},         {"u_hi", f.u_hi},           {"n_points", f.n_points},
          {"predicted", f.predicted}, {"rel_dev", f.rel_dev}};
}

ordered_json witness(std::string check, double u, ordered_json value, std::string note) {
  return {{"check", std::move(check)}, {"u", u}, {"value", std::move(value)}, {"note", std::move(note)}};
}

ordered_json result_json(const ParamsResult& r, std::size_t index) {
  ordered_json j;
  j["index"] = index;
  j["params"] = {{"alpha", r.params.alpha}, {"beta", r.params.beta}, {"n", r.params.dim}};
  j["seed"] = r.seed;
  j["admissible"] = r.violations.empty();
  j["passed"] = r.passed();

  ordered_json witnesses = ordered_json::array();
  if (!r.violations.empty()) {
    witnesses.push_back(witness("admissible", kNoPoint,
                                {{"alpha", r.params.alpha}, {"beta", r.params.beta}, {"n", r.params.dim}},
                                r.violations));
  }

  if (r.conditions) {
    ordered_json conds = ordered_json::object();
    for (const auto& v : r.conditions->verdicts) {
      conds[std::string(to_string(v.condition))] = {
          {"passed", v.passed}, {"checked", v.checked}, {"margin", scaled_json(v.margin)}};
    }
    j["conditions"] = std::move(conds);
    j["completeness_note"] = r.conditions->completeness_note;
    for (const auto& w : r.conditions->witnesses) {
      witnesses.push_back(witness("condition_" + std::string(to_string(w.condition)), w.u, scaled_json(w.value), w.note));
    }
  }

  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"u", c.u},
                      {"detail", c.detail}});
    if (!c.passed) witnesses.push_back(witness(c.name, c.u, c.value, c.detail));
  }
  j["checks"] = std::move(checks);

  ordered_json fits = ordered_json::array();
  for (const auto& f : r.fits) {
    ordered_json fj = {{"observable", f.observable}};
    fj.update(fit_json(f.fit));
    fj["tolerance"] = f.tolerance;
    fj["passed"] = f.passed;
    if (f.intermediate) fj["intermediate"] = fit_json(*f.intermediate);
    fits.push_back(std::move(fj));
    if (!f.passed) {
      std::ostringstream note;
      note << "slope " << f.fit.slope << " vs predicted " << f.fit.predicted << ", tolerance " << f.tolerance;
      witnesses.push_back(witness("fit_" + f.observable, f.fit.u_lo, f.fit.rel_dev, note.str()));
    }
  }
  j["fits"] = std::move(fits);

  ordered_json app = ordered_json::array();
  for (const auto& s : r.appendix) {
    ordered_json aj = {{"function", std::string(to_string(s.function))},
                       {"order", s.order},
                       {"domain_lo", s.domain_lo},
                       {"domain_hi", s.domain_hi},
                       {"points", s.points},
                       {"min_value", scaled_json(s.min_value)},
                       {"argmin", s.argmin},
                       {"positive", s.positive}};
    if (s.above_lower_bound) aj["above_lower_bound"] = *s.above_lower_bound;
    if (s.n0) aj["n0"] = *s.n0;
    app.push_back(std::move(aj));
  }
  j["appendix"] = std::move(app);

  if (!r.profile_file.empty()) j["profile_file"] = r.profile_file;
  j["errors"] = r.errors;
  for (const auto& e : r.errors) witnesses.push_back(witness("exception", kNoPoint, nullptr, e));
  j["witnesses"] = std::move(witnesses);
  return j;
}

}  // namespace

RunReport run(const RunConfig& config) {
  RunReport report;
  report.version = std::string(tool_version());
  report.timestamp = utc_timestamp();
  report.seed = config.seed;
  report.mode = config.mode;
  report.grid = config.grid;
  report.tolerances = config.tol;
  report.results.resize(config.params.size());

  const std::size_t count = config.params.size();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      report.results[i] = evaluate(config.params[i], config.seed + i, config, config.tol);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  return report;
}

void emit_csv(const GeodesicProfile& profile, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  os << "u,rho,vol,scal,cond_iii_value,cond_iv_value,cond_v_value\n";
  char buf[64];
  // Shortest text that round-trips, so 1e-06 stays 1e-06.
  auto put = [&](double v, char sep) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, res.ptr - buf);
    os.put(sep);
  };
  for (const auto& row : profile.rows) {
    const CurvatureScalars sc = abc(profile.params, LogRadius(row.u));
    const double scale = -2.0 * row.u;
    put(row.u, ',');
    put(row.rho, ',');
    put(row.vol, ',');
    put(row.scal, ',');
    put(sc.A.at_scale(scale), ',');
    put(sc.K.at_scale(scale), ',');
    put(sc.AB.at_scale(scale), '\n');
  }
  os.flush();
  if (!os) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string to_json(const RunReport& report, bool include_timestamp) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "kahler";
  j["version"] = report.version;
  if (include_timestamp) j["timestamp"] = report.timestamp;
  j["seed"] = report.seed;
  j["mode"] = std::string(to_string(report.mode));
  j["overall_pass"] = report.overall_pass();
  j["grid"] = {{"lo", report.grid.lo},
               {"hi", report.grid.hi},
               {"count", report.grid.count},
               {"spacing", report.grid.log_spacing ? "log" : "linear"},
               {"limit_branch", report.grid.limit_branch}};
  const Tolerances& t = report.tolerances;
  j["tolerances"] = {{"strict_eps", t.strict_eps},       {"completeness", t.completeness},
                     {"fd_rel", t.fd_rel},               {"volume_closed_rel", t.volume_closed_rel},
                     {"volume_fit", t.volume_fit},       {"curvature_fit", t.curvature_fit},
                     {"appendix_zero", t.appendix_zero}};
  ordered_json diags = ordered_json::array();
  for (const auto& d : report.config_diagnostics) {
    diags.push_back({{"line", d.line}, {"message", d.message}, {"semantic", d.semantic}});
  }
  j["config_diagnostics"] = std::move(diags);
  j["output_errors"] = report.output_errors;
  ordered_json results = ordered_json::array();
  for (std::size_t i = 0; i < report.results.size(); ++i) results.push_back(result_json(report.results[i], i));
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

void emit_json(const RunReport& report, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  os << to_json(report);
  os.flush();
  if (!os) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_outputs(RunReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) report.output_errors.push_back("cannot create '" + dir.string() + "': " + ec.message());

  for (std::size_t i = 0; i < report.results.size(); ++i) {
    auto& r = report.results[i];
    if (!r.profile) continue;
    char name[32];
    std::snprintf(name, sizeof name, "profile_%03zu.csv", i);
    try {
      emit_csv(*r.profile, dir / name);
      r.profile_file = name;
    } catch (const std::exception& e) {
      report.output_errors.emplace_back(e.what());
    }
  }
  try {
    emit_json(report, dir / "report.json");
  } catch (const std::exception& e) {
    report.output_errors.emplace_back(e.what());
  }
}

}  // namespace kahler
