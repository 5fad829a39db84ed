#include "kahler/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace kahler {

std::string_view to_string(RunMode m) {
  switch (m) {
    case RunMode::Verify: return "verify";
    case RunMode::Profile: return "profile";
    case RunMode::Fit: return "fit";
    case RunMode::Appendix: return "appendix";
    case RunMode::All: return "all";
  }
  return "?";
}

RunMode parse_run_mode(std::string_view name) {
  for (RunMode m : {RunMode::Verify, RunMode::Profile, RunMode::Fit, RunMode::Appendix, RunMode::All}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown run mode '" + std::string(name) + "'");
}

Tolerances Tolerances::scaled(double k) const {
  Tolerances t = *this;
  t.completeness *= k;
  t.fd_rel *= k;
  t.volume_closed_rel *= k;
  t.volume_fit *= k;
  t.curvature_fit *= k;
  t.appendix_zero *= k;
  return t;
}

std::vector<FamilyParams> default_suite() {
  std::vector<FamilyParams> out;
  for (double b : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    for (double a : {b + 0.25, b + 1.0, 2.0 * b + 2.0}) {
      for (int n : {2, 3, 5}) out.push_back(FamilyParams::make(a, b, n));
    }
  }
  return out;
}

RunConfig default_config() {
  RunConfig c;
  c.params = default_suite();
  return c;
}

namespace {

std::string join_diags(const std::vector<ConfigDiagnostic>& d) {
  std::ostringstream os;
  os << "invalid configuration:";
  for (const auto& x : d) {
    os << "\n  ";
    if (x.line > 0) os << "line " << x.line << ": ";
    os << x.message;
  }
  return os.str();
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

template <class Int>
std::optional<Int> to_int(std::string_view s) {
  s = trim(s);
  Int v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<bool> to_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  return std::nullopt;
}

std::optional<std::pair<double, double>> to_window(std::string_view s) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto a = to_double(s.substr(0, comma));
  auto b = to_double(s.substr(comma + 1));
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

// Splits "alpha=2 beta=0, n=2" into key/value pairs.
std::vector<std::pair<std::string, std::string>> split_assignments(std::string_view line) {
  std::string cleaned(line);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(cleaned);
  std::string tok;
  // Re-join "key = value" written with spaces around '='.
  std::vector<std::string> toks;
  while (is >> tok) toks.push_back(tok);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::string t = toks[i];
    if (i + 1 < toks.size() && toks[i + 1].front() == '=') {
      t += toks[++i];
      if (t.back() == '=' && i + 1 < toks.size()) t += toks[++i];
    } else if (t.back() == '=' && i + 1 < toks.size()) {
      t += toks[++i];
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      // A bare number after a pair continues a list value such as "lo,hi".
      if (!out.empty() && !out.back().second.empty() && to_double(t)) {
        out.back().second += "," + t;
      } else {
        out.emplace_back(t, std::string());
      }
    } else {
      out.emplace_back(t.substr(0, eq), t.substr(eq + 1));
    }
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigDiagnostic> diags)
    : std::runtime_error(join_diags(diags)), diags_(std::move(diags)) {}

ParsedConfig parse_config_lenient(std::string_view text) {
  RunConfig cfg;
  std::vector<ConfigDiagnostic> diags;
  std::string section = "params";
  int lineno = 0;

  auto err = [&](std::string msg) { diags.push_back({lineno, std::move(msg), false}); };
  auto semantic = [&](std::string msg) { diags.push_back({lineno, std::move(msg), true}); };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        err("syntax error: unterminated section header");
        continue;
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      static const char* known[] = {"params", "grid", "sampling", "tolerances", "fit", "output", "run"};
      if (std::find(std::begin(known), std::end(known), section) == std::end(known)) {
        err("unknown section [" + section + "]");
      }
      continue;
    }

    const auto kvs = split_assignments(line);
    if (section == "params") {
      std::optional<double> alpha;
      std::optional<double> beta;
      std::optional<int> n;
      bool bad = false;
      for (const auto& [k, v] : kvs) {
        if (v.empty()) {
          err("syntax error: expected key=value, got '" + k + "'");
          bad = true;
        } else if (k == "alpha") {
          if (!(alpha = to_double(v))) err("alpha: not a number '" + v + "'"), bad = true;
        } else if (k == "beta") {
          if (!(beta = to_double(v))) err("beta: not a number '" + v + "'"), bad = true;
        } else if (k == "n") {
          if (!(n = to_int<int>(v))) err("n: not an integer '" + v + "'"), bad = true;
        } else {
          err("unknown params key '" + k + "'");
          bad = true;
        }
      }
      if (bad) continue;
      std::vector<std::string> missing;
      if (!alpha) missing.emplace_back("alpha");
      if (!beta) missing.emplace_back("beta");
      if (!n) missing.emplace_back("n");
      // Semantic checks on whatever was given, then report missing keys.
      const FamilyParams p = FamilyParams::unchecked(alpha.value_or(INFINITY), beta.value_or(0.0), n.value_or(2));
      if (n && *n < 2) semantic("n >= 2 required (got n=" + std::to_string(*n) + ")");
      if (beta && *beta < 0.0) {
        std::ostringstream m;
        m << "beta >= 0 required (got beta=" << *beta << ")";
        semantic(m.str());
      }
      if (alpha && beta && !(*alpha > *beta)) {
        std::ostringstream m;
        m << "alpha > beta required (got alpha=" << *alpha << ", beta=" << *beta << ")";
        semantic(m.str());
      }
      if (!missing.empty()) {
        std::string m = "incomplete triple, missing:";
        for (const auto& s : missing) m += " " + s;
        err(m);
        continue;
      }
      cfg.params.push_back(p);
      continue;
    }

    for (const auto& [k, v] : kvs) {
      auto need_double = [&](double& dst) {
        if (auto d = to_double(v)) dst = *d; else err(k + ": not a number '" + v + "'");
      };
      auto need_size = [&](std::size_t& dst) {
        if (auto d = to_int<std::size_t>(v)) dst = *d; else err(k + ": not a non-negative integer '" + v + "'");
      };
      auto need_bool = [&](bool& dst) {
        if (auto d = to_bool(v)) dst = *d; else err(k + ": not a boolean '" + v + "'");
      };
      auto need_window = [&](std::pair<double, double>& dst) {
        if (auto d = to_window(v)) dst = *d; else err(k + ": expected 'lo,hi' window, got '" + v + "'");
      };
      if (v.empty()) {
        err("syntax error: expected key=value, got '" + k + "'");
        continue;
      }
      if (section == "grid") {
        if (k == "lo") need_double(cfg.grid.lo);
        else if (k == "hi") need_double(cfg.grid.hi);
        else if (k == "count") need_size(cfg.grid.count);
        else if (k == "spacing") {
          if (v == "log") cfg.grid.log_spacing = true;
          else if (v == "linear") cfg.grid.log_spacing = false;
          else err("spacing: expected 'log' or 'linear', got '" + v + "'");
        } else if (k == "limit_branch") need_bool(cfg.grid.limit_branch);
        else err("unknown grid key '" + k + "'");
      } else if (section == "sampling") {
        if (k == "samples") need_size(cfg.samples);
        else if (k == "seed") {
          if (auto s = to_int<std::uint64_t>(v)) cfg.seed = *s; else err("seed: not an unsigned integer '" + v + "'");
        } else err("unknown sampling key '" + k + "'");
      } else if (section == "tolerances") {
        if (k == "strict_eps") need_double(cfg.tol.strict_eps);
        else if (k == "completeness") need_double(cfg.tol.completeness);
        else if (k == "fd_rel") need_double(cfg.tol.fd_rel);
        else if (k == "volume_closed_rel") need_double(cfg.tol.volume_closed_rel);
        else if (k == "volume_fit") need_double(cfg.tol.volume_fit);
        else if (k == "curvature_fit") need_double(cfg.tol.curvature_fit);
        else if (k == "appendix_zero") need_double(cfg.tol.appendix_zero);
        else err("unknown tolerances key '" + k + "'");
      } else if (section == "fit") {
        if (k == "volume_window") need_window(cfg.fit.volume_window);
        else if (k == "curvature_window") need_window(cfg.fit.curvature_window);
        else if (k == "points") need_size(cfg.fit.points);
        else err("unknown fit key '" + k + "'");
      } else if (section == "output") {
        if (k == "dir") cfg.out_dir = v;
        else err("unknown output key '" + k + "'");
      } else if (section == "run") {
        if (k == "mode") {
          try {
            cfg.mode = parse_run_mode(v);
          } catch (const std::invalid_argument& e) {
            err(e.what());
          }
        } else err("unknown run key '" + k + "'");
      }
    }
  }

  lineno = 0;
  if (cfg.grid.count < 1) err("grid count >= 1 required");
  if (!(cfg.grid.hi >= cfg.grid.lo)) err("grid hi >= lo required");
  if (cfg.grid.lo < 0.0) err("grid lo >= 0 required");
  if (cfg.grid.lo == 0.0 && !cfg.grid.limit_branch) {
    err("grid lo > 0 required unless limit_branch = true");
  }
  if (cfg.grid.log_spacing && cfg.grid.lo == 0.0 && cfg.grid.count > 1) {
    err("log spacing needs grid lo > 0");
  }
  if (cfg.samples < 1) err("sampling samples >= 1 required");
  if (cfg.fit.points < 8) err("fit points >= 8 required");
  for (const auto* w : {&cfg.fit.volume_window, &cfg.fit.curvature_window}) {
    if (!(w->first > 0.0 && w->second > w->first)) err("fit windows need 0 < lo < hi");
  }
  if (cfg.params.empty()) cfg.params = default_suite();
  return {std::move(cfg), std::move(diags)};
}

RunConfig parse_config(std::string_view text) {
  ParsedConfig parsed = parse_config_lenient(text);
  if (!parsed.diagnostics.empty()) throw ConfigError(std::move(parsed.diagnostics));
  return std::move(parsed.config);
}

bool ParsedConfig::only_semantic() const {
  return std::all_of(diagnostics.begin(), diagnostics.end(), [](const ConfigDiagnostic& d) { return d.semantic; });
}

}  // namespace kahler
