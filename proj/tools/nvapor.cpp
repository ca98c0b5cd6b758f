// nvapor: spectra, group velocity and validation for the driven N-scheme vapor.

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "nvapor/cli.hpp"
#include "nvapor/validation.hpp"

namespace {

using namespace nvapor;

constexpr int kUsageError = 2;

// Long flags shared by spectrum, groupvelocity and figure; each maps to a config key.
const char* const kKeys[] = {"backend", "h",      "alpha0",    "alpha-sq",  "eps0",        "x0",
                             "grid",    "format", "out",       "abscissa",  "sweep",       "transcription",
                             "lambda-p", "density", "gamma-rad", "omega-p", "probe-ratio", "n0",
                             "coherence-scale"};

struct Layers {
  std::optional<std::string> preset;
  std::optional<std::string> config;
  std::map<std::string, std::string> flags;
};

void add_run_flags(CLI::App* cmd, Layers& layers, bool with_preset) {
  if (with_preset) cmd->add_option("--preset", layers.preset, "fig3 .. fig9");
  cmd->add_option("--config", layers.config, "key = value file");
  for (const char* key : kKeys) {
    std::string name = std::string("--") + key;
    cmd->add_option_function<std::string>(
        name, [&layers, key](const std::string& v) { layers.flags[key] = v; }, key);
  }
}

cli::RunConfig resolve(const Layers& layers, cli::RunConfig base) {
  if (layers.preset) base = cli::preset(*layers.preset);
  if (layers.config)
    for (const auto& [k, v] : cli::read_config_file(*layers.config)) base.apply(k, v);
  for (const auto& [k, v] : layers.flags) base.apply(k, v);
  return base;
}

void emit(const cli::Table& t, const cli::RunConfig& cfg) {
  const std::string text = cfg.format == "json" ? cli::to_json(t, cfg) : cli::to_csv(t);
  if (cfg.out.empty() || cfg.out == "-") std::cout << text;
  else cli::write_text(cfg.out, text);
}

int run(const cli::RunConfig& cfg) {
  if (cfg.command == cli::Command::Spectrum) {
    const auto t = cli::run_spectrum(cfg);
    emit(t, cfg);
    std::cerr << cli::spectrum_summary(t) << "\n";
  } else {
    const auto t = cli::run_group_velocity(cfg);
    emit(t, cfg);
    std::cerr << t.rows.size() << " group-velocity points\n";
  }
  return 0;
}

int validate(const std::string& suite, double a3_scale, const std::string& report_path,
             const std::string& ledger_path) {
  validation::Options opt;
  opt.a3_scale = a3_scale;
  const auto r = validation::run(suite, opt);
  for (const auto& c : r.checks)
    std::cout << (c.passed ? "pass " : "FAIL ") << c.name << "  err=" << c.max_error << " tol=" << c.tolerance
              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  for (const auto& d : r.discrepancies) std::cout << "discrepancy: " << d.item << "\n";
  if (!report_path.empty()) cli::write_text(report_path, cli::report_json(r).dump(2) + "\n");
  if (!ledger_path.empty()) cli::write_text(ledger_path, cli::ledger_entry(r), true);
  std::cout << (r.passed() ? "validate " + suite + ": all checks passed\n"
                           : "validate " + suite + ": FAILED\n");
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven four-level N-scheme vapor: probe spectra, group velocity, validation"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  Layers spec_layers, gv_layers, fig_layers;
  auto* spectrum = app.add_subcommand("spectrum", "probe absorption and dispersion spectrum");
  add_run_flags(spectrum, spec_layers, true);
  auto* groupvelocity = app.add_subcommand("groupvelocity", "group velocity sweep at f_p = h");
  add_run_flags(groupvelocity, gv_layers, true);

  auto* figure = app.add_subcommand("figure", "data for one of the figures 3-9");
  int figure_number = 0;
  figure->add_option("number", figure_number, "figure number")->required()->check(CLI::Range(3, 9));
  add_run_flags(figure, fig_layers, false);

  auto* validate_cmd = app.add_subcommand("validate", "run the cross-check suites");
  std::string suite = "all";
  std::string report_path = "validation_report.json";
  std::string ledger_path = "DISCREPANCIES.md";
  double a3_scale = 1.0;
  validate_cmd->add_option("suite", suite, "oracle | doppler | limits | all")
      ->check(CLI::IsMember({"oracle", "doppler", "limits", "all"}));
  validate_cmd->add_option("--report", report_path, "JSON report path ('' to skip)");
  validate_cmd->add_option("--ledger", ledger_path, "discrepancy ledger, appended ('' to skip)");
  validate_cmd->add_option("--perturb-a3", a3_scale, "scale the A3 residue (mutation check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*spectrum) {
      cli::RunConfig base;
      base.command = cli::Command::Spectrum;
      auto cfg = resolve(spec_layers, base);
      cfg.command = cli::Command::Spectrum;
      return run(cfg);
    }
    if (*groupvelocity) {
      cli::RunConfig base;
      base.command = cli::Command::GroupVelocity;
      auto cfg = resolve(gv_layers, base);
      cfg.command = cli::Command::GroupVelocity;
      return run(cfg);
    }
    if (*figure) {
      fig_layers.preset = "fig" + std::to_string(figure_number);
      return run(resolve(fig_layers, {}));
    }
    return validate(suite, a3_scale, report_path, ledger_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::Config || e.code() == ErrorCode::InvalidArgument ||
                       e.code() == ErrorCode::InvalidRates;
    return usage ? kUsageError : 1;
  }
}
