#pragma once

// Run configuration, figure presets and table output for the nvapor tool.
//
// Settings are layered: preset, then config file, then command-line flags.
// Config files are flat `key = value` lines with `#` comments; keys are the
// long flag names without dashes in front.

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nvapor/error.hpp"
#include "nvapor/model.hpp"
#include "nvapor/optics.hpp"
#include "nvapor/validation.hpp"

namespace nvapor::cli {

struct Grid {
  double start = -30.0;
  double stop = 30.0;
  int count = 601;

  /// "start:stop:count".
  static Grid parse(const std::string& text) {
    Grid g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    std::string rest;
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' || (in >> rest))
      throw Error(ErrorCode::Config, "grid must look like start:stop:count, got '" + text + "'");
    if (g.count < 1) throw Error(ErrorCode::Config, "grid is empty");
    if (g.count > 1 && !(g.stop > g.start)) throw Error(ErrorCode::Config, "grid needs start < stop");
    return g;
  }

  std::vector<double> points() const { return optics::linear_grid(start, stop, count); }

  std::string str() const {
    std::ostringstream s;
    s.precision(17);
    s << start << ':' << stop << ':' << count;
    return s.str();
  }
};

enum class Command { Spectrum, GroupVelocity };

struct RunConfig {
  Command command = Command::Spectrum;
  optics::Backend backend = optics::Backend::DopplerClosed;
  double h = 0.0;
  double eps0 = 0.1;
  double x0 = 100.0;
  std::optional<double> alpha0;
  std::optional<double> alpha_sq;
  Grid grid{};
  /// "fp": the grid is the probe detuning. "h": the grid is h and f_p = h.
  std::string abscissa = "fp";
  /// Group-velocity sweep variable: "field" (h) or "drive" (|alpha_0|).
  std::string sweep = "field";
  std::string transcription = "corrected";
  std::string format = "csv";
  std::string out;
  optics::GroupVelocityParams gv{};

  double resolved_alpha_sq() const {
    if (alpha_sq) return *alpha_sq;
    if (alpha0) return *alpha0 * *alpha0 * eps0;
    return 10.0;
  }

  /// Sets one key; the alpha0 / alpha-sq pair is exclusive, the last one wins.
  void apply(const std::string& key, const std::string& value) {
    auto num = [&]() {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || !std::isfinite(v))
        throw Error(ErrorCode::Config, "key '" + key + "' needs a number, got '" + value + "'");
      return v;
    };
    auto pick = [&](std::initializer_list<const char*> allowed) {
      for (const char* a : allowed)
        if (value == a) return value;
      throw Error(ErrorCode::Config, "bad value '" + value + "' for key '" + key + "'");
    };
    if (key == "backend") backend = optics::backend_from_string(value);
    else if (key == "h") h = num();
    else if (key == "eps0") eps0 = num();
    else if (key == "x0") x0 = num();
    else if (key == "alpha0") { alpha0 = num(); alpha_sq.reset(); }
    else if (key == "alpha-sq") { alpha_sq = num(); alpha0.reset(); }
    else if (key == "grid") grid = Grid::parse(value);
    else if (key == "abscissa") abscissa = pick({"fp", "h"});
    else if (key == "sweep") sweep = pick({"field", "drive"});
    else if (key == "transcription") transcription = pick({"corrected", "printed"});
    else if (key == "format") format = pick({"csv", "json"});
    else if (key == "out") out = value;
    else if (key == "lambda-p") gv.lambda_p_cm = num();
    else if (key == "density") gv.N = num();
    else if (key == "gamma-rad") gv.gamma_rad_over_gamma = num();
    else if (key == "omega-p") gv.omega_p_over_gamma = num();
    else if (key == "probe-ratio") gv.probe_ratio = num();
    else if (key == "n0") gv.n0 = num();
    else if (key == "coherence-scale") {
      gv.scale = pick({"physical", "normalized"}) == "physical" ? optics::CoherenceScale::Physical
                                                                 : optics::CoherenceScale::Normalized;
    } else {
      throw Error(ErrorCode::Config, "unknown key '" + key + "'");
    }
  }

  optics::SpectrumParams spectrum_params() const {
    optics::SpectrumParams p;
    p.rates = AtomRates::dimensionless(eps0);
    p.drive = DriveConfig::resonant(resolved_alpha_sq(), cplx(1.0, 0.0), 0.0, eps0);
    p.field = MagneticConfig::make(h);
    p.ensemble = DopplerEnsemble::make(x0);
    p.closed.transcription =
        transcription == "printed" ? doppler::Transcription::Printed : doppler::Transcription::Corrected;
    return p;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command == Command::Spectrum ? "spectrum" : "groupvelocity";
    j["backend"] = optics::to_string(backend);
    j["h"] = h;
    j["eps0"] = eps0;
    j["x0"] = x0;
    j["alpha-sq"] = resolved_alpha_sq();
    j["grid"] = grid.str();
    j["abscissa"] = abscissa;
    j["sweep"] = sweep;
    j["transcription"] = transcription;
    j["format"] = format;
    j["lambda-p"] = gv.lambda_p_cm;
    j["density"] = gv.N;
    j["gamma-rad"] = gv.gamma_rad_over_gamma;
    j["omega-p"] = gv.omega_p_over_gamma;
    j["probe-ratio"] = gv.probe_ratio;
    j["n0"] = gv.n0;
    j["coherence-scale"] = gv.scale == optics::CoherenceScale::Physical ? "physical" : "normalized";
    return j;
  }
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Reads `key = value` lines. Blank lines and `#` comments are skipped.
inline std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Config, "line " + std::to_string(n) + ": expected key = value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Io, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

/// Figure presets. Figures 3-5 are atoms at rest, 6-7 the vapor spectra and
/// 8-9 the group-velocity sweeps.
inline RunConfig preset(const std::string& name) {
  RunConfig c;
  auto set = [&](std::initializer_list<std::pair<const char*, const char*>> kv) {
    for (const auto& [k, v] : kv) c.apply(k, v);
  };
  if (name == "fig3") {
    set({{"backend", "rest-atom"}, {"h", "0"}, {"alpha-sq", "10"}, {"eps0", "0.1"}, {"grid", "-30:30:601"}});
  } else if (name == "fig4") {
    set({{"backend", "rest-atom"}, {"h", "7"}, {"alpha-sq", "10"}, {"eps0", "0.1"}, {"grid", "-30:30:601"}});
  } else if (name == "fig5") {
    set({{"backend", "rest-atom"}, {"abscissa", "h"}, {"alpha-sq", "10"}, {"eps0", "0.1"}, {"grid", "0:20:201"}});
  } else if (name == "fig6") {
    set({{"backend", "doppler-closed"}, {"h", "0"}, {"alpha0", "10"}, {"eps0", "0.1"}, {"x0", "100"},
         {"grid", "-30:30:601"}});
  } else if (name == "fig7") {
    set({{"backend", "doppler-closed"}, {"h", "10"}, {"alpha0", "10"}, {"eps0", "0.1"}, {"x0", "100"},
         {"grid", "-30:30:601"}});
  } else if (name == "fig8") {
    c.command = Command::GroupVelocity;
    set({{"backend", "doppler-closed"}, {"sweep", "field"}, {"alpha0", "10"}, {"eps0", "0.1"}, {"x0", "100"},
         {"grid", "0:15:151"}});
  } else if (name == "fig9") {
    c.command = Command::GroupVelocity;
    set({{"backend", "doppler-closed"}, {"sweep", "drive"}, {"h", "10"}, {"eps0", "0.1"}, {"x0", "100"},
         {"grid", "1:40:196"}});
  } else {
    throw Error(ErrorCode::Config, "unknown preset '" + name + "'");
  }
  return c;
}

/// Output rows: numbers, or a flag string in the last group-velocity column.
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_csv(const Table& t) {
  std::ostringstream s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s << (i ? "," : "") << t.columns[i];
  s << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      s << (i ? "," : "");
      if (const auto* d = std::get_if<double>(&row[i])) s << format_number(*d);
      else s << std::get<std::string>(row[i]);
    }
    s << '\n';
  }
  return s.str();
}

inline std::string to_json(const Table& t, const RunConfig& cfg) {
  nlohmann::json j;
  j["columns"] = t.columns;
  auto rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::json::array();
    for (const auto& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        if (std::isfinite(*d)) r.push_back(*d);
        else r.push_back(nullptr);
      } else {
        r.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["config"] = cfg.to_json();
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

inline Table run_spectrum(const RunConfig& cfg) {
  if (cfg.grid.count < 2) throw Error(ErrorCode::Config, "spectra need at least two grid points");
  const auto params = cfg.spectrum_params();
  const auto grid = cfg.grid.points();
  Table t;
  if (cfg.abscissa == "fp") {
    t.columns = {"f_p", "re", "im"};
    for (const auto& s : optics::spectrum(cfg.backend, params, grid))
      t.rows.push_back({s.f_p, s.value.real(), s.value.imag()});
    return t;
  }
  t.columns = {"h", "re", "im"};
  for (double h : grid) {
    auto p = params;
    p.field = MagneticConfig::make(h);
    cplx v;
    try {
      v = optics::evaluate(cfg.backend, p, h);
    } catch (const Error& e) {
      throw Error(e.code(), "at f_p=h=" + format_number(h) + ": " + e.what());
    }
    t.rows.push_back({h, v.real(), v.imag()});
  }
  return t;
}

/// Divergent points are kept as NaN with flag "divergent".
inline Table run_group_velocity(const RunConfig& cfg) {
  const auto params = cfg.spectrum_params();
  const auto grid = cfg.grid.points();
  Table t;
  t.columns = {cfg.sweep == "field" ? "h" : "alpha0", "v_gr_over_c", "flag"};
  for (double x : grid) {
    auto p = params;
    double fp = cfg.h;
    if (cfg.sweep == "field") {
      p.field = MagneticConfig::make(x);
      fp = x;
    } else {
      p.drive = p.drive.with_alpha(cplx(x * std::sqrt(cfg.eps0), 0.0));
    }
    try {
      const auto g = optics::group_velocity(p, cfg.gv, fp, optics::kDefaultSlopeStep, cfg.backend);
      t.rows.push_back({x, g.v_over_c, std::string(g.accuracy_warning ? "slope-warning" : "ok")});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivergentVelocity) throw;
      t.rows.push_back({x, std::numeric_limits<double>::quiet_NaN(), std::string("divergent")});
    }
  }
  return t;
}

inline std::string spectrum_summary(const Table& t) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double im = std::get<double>(t.rows[i][2]);
    if (im < std::get<double>(t.rows[lo][2])) lo = i;
    if (im > std::get<double>(t.rows[hi][2])) hi = i;
  }
  std::ostringstream s;
  s.precision(6);
  s << "absorption min " << std::get<double>(t.rows[lo][2]) << " at " << t.columns[0] << "="
    << std::get<double>(t.rows[lo][0]) << ", max " << std::get<double>(t.rows[hi][2]) << " at "
    << t.columns[0] << "=" << std::get<double>(t.rows[hi][0]);
  return s.str();
}

inline nlohmann::json report_json(const validation::Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json cj{{"name", c.name}, {"passed", c.passed}, {"tolerance", c.tolerance}, {"detail", c.detail}};
    if (std::isfinite(c.max_error)) cj["max_error"] = c.max_error;
    else cj["max_error"] = nullptr;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  auto disc = nlohmann::json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"item", d.item}, {"resolution", d.resolution}, {"printed_error", d.printed_error},
                    {"corrected_error", std::isfinite(d.corrected_error) ? nlohmann::json(d.corrected_error) : nlohmann::json()}});
  j["discrepancies"] = disc;
  return j;
}

/// Markdown block appended to the discrepancy ledger after a validation run.
inline std::string ledger_entry(const validation::Report& r) {
  std::ostringstream s;
  s.precision(3);
  s << "## validate " << r.suite << (r.passed() ? " (passed)" : " (FAILED)") << "\n\n";
  if (r.discrepancies.empty()) s << "- no printed-versus-reference discrepancies detected\n";
  for (const auto& d : r.discrepancies)
    s << "- " << d.item << ": printed form off by " << d.printed_error << ", repaired form off by "
      << d.corrected_error << ". " << d.resolution << "\n";
  for (const auto& c : r.checks)
    if (!c.passed) s << "- FAILED " << c.name << ": " << c.max_error << " > " << c.tolerance << "\n";
  s << "\n";
  return s.str();
}

inline void write_text(const std::string& path, const std::string& text, bool append = false) {
  std::ofstream f(path, append ? std::ios::app : std::ios::trunc);
  if (!f) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace nvapor::cli
