#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rindler/error.hpp"
#include "rindler/freefield.hpp"
#include "rindler/grid.hpp"
#include "rindler/localize.hpp"
#include "rindler/mirror.hpp"
#include "rindler/montecarlo.hpp"
#include "rindler/serialize.hpp"
#include "rindler/validation.hpp"

namespace fs = std::filesystem;
using namespace rindler;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfigError = 2;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool stationary = false;
  std::string suite = "acceptance";
  std::string input;
  std::string stderr_input;
  std::optional<std::size_t> realizations;
};

RunConfig resolve(const Options& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (o.seed) cfg.estimator.seed = *o.seed;
  if (!o.out.empty()) cfg.out_dir = o.out;
  if (o.realizations) cfg.estimator.realizations = *o.realizations;
  return cfg;
}

std::string output_path(const RunConfig& cfg, const std::string& stem) {
  fs::create_directories(cfg.out_dir);
  return (fs::path(cfg.out_dir) / (cfg.prefix + "_" + stem)).string();
}

void emit(const RunConfig& cfg, const std::string& stem, const std::string& text) {
  const auto path = output_path(cfg, stem);
  write_text(path, text);
  std::cout << path << "\n";
}

double length_scale(const TrajectorySpec& spec, double c0) {
  if (auto* r = std::get_if<traj::Rindler>(&spec)) return r->xi;
  if (auto* r = std::get_if<traj::ObliqueRindler>(&spec)) return r->xi;
  if (auto* r = std::get_if<traj::HelicoidAccelerated>(&spec)) return r->xi;
  return c0 * time_scale(spec, c0);
}

int cmd_spectrum(const Options& o) {
  const auto cfg = resolve(o);
  const auto eta = cfg.eta.values();
  const auto nu = cfg.nu.values();
  const double xi = cfg.scene ? cfg.scene->xi : 1.0;
  const auto planck = planck_grid(eta, nu, xi, cfg.spectrum.f0, cfg.c0);
  emit(cfg, "planck.csv", to_csv(planck));
  Json meta = to_json(cfg);
  meta["command"] = "spectrum";
  if (cfg.scene) {
    auto R = correction_grid(cfg.scene->alpha, cfg.scene->alpha0(), eta, nu);
    emit(cfg, "correction.csv", to_csv(R));
    emit(cfg, "wigner.csv", to_csv(mirror_wigner_grid(*cfg.scene, cfg.spectrum.f0, eta, nu)));
  }
  emit(cfg, "spectrum.json", meta.dump(2) + "\n");
  return kOk;
}

int cmd_simulate(const Options& o) {
  const auto cfg = resolve(o);
  if (!(cfg.spectrum.eps > 0.0)) fail(ErrorCode::Config, "/spectrum/eps: simulation needs eps > 0");
  const bool half_space = cfg.scene.has_value();
  TrajectorySpec spec = cfg.trajectory.value_or(TrajectorySpec{traj::Rindler{1.0}});
  if (half_space) spec = cfg.scene->trajectory();
  const double L = length_scale(spec, cfg.c0);

  EstimatorConfig est;
  est.realizations = cfg.estimator.realizations;
  est.waves = cfg.estimator.waves;
  est.seed = cfg.estimator.seed;
  est.window = cfg.estimator.window;
  for (double e : cfg.eta.values()) est.tau.push_back(e * L / cfg.c0);
  est.lag = cfg.lag.values();
  if (est.lag.front() != 0.0) fail(ErrorCode::Config, "/grids/tau_prime: lag grid must start at 0");
  std::vector<double> omega;
  for (double v : cfg.nu.values()) omega.push_back(v * cfg.c0 / L);

  const auto w = estimate_wigner(cfg.spectrum, spec, est, omega, half_space, cfg.c0, L);
  emit(cfg, "autocorr.csv", to_csv(w.autocorr.mean));
  emit(cfg, "autocorr_stderr.csv", to_csv(w.autocorr.std_error));
  emit(cfg, "wigner.csv", to_csv(w.mean));
  emit(cfg, "wigner_stderr.csv", to_csv(w.std_error));

  // Windowed free-space spectrum used as the reference for flatness and the observed correction.
  const double eps = cfg.spectrum.eps;
  WignerGrid reference(w.mean.eta, w.mean.nu);
  for (std::size_t i = 0; i < est.tau.size(); ++i) {
    std::vector<double> row;
    if (std::holds_alternative<traj::Rindler>(spec) || half_space) {
      const double tau = est.tau[i];
      auto W = [&](double x) { return rindler_wigner_regularized(L, cfg.spectrum.f0, eps, tau, x, cfg.c0); };
      row = windowed_wigner(W, omega, est.window);
      for (std::size_t j = 0; j < omega.size(); ++j) reference.at(i, j) = row[j];
    }
  }
  reference.meta["kind"] = "wigner_reference";
  reference.meta["window"] = w.mean.meta.at("window");
  if (std::holds_alternative<traj::Rindler>(spec) || half_space) emit(cfg, "wigner_reference.csv", to_csv(reference));

  if (half_space) {
    WignerGrid R(w.mean.eta, w.mean.nu), Rse(w.mean.eta, w.mean.nu);
    for (std::size_t k = 0; k < R.values.size(); ++k) {
      R.values[k] = 1.0 - w.mean.values[k] / reference.values[k];
      Rse.values[k] = w.std_error.values[k] / std::abs(reference.values[k]);
    }
    R.meta = {{"kind", "correction"}, {"window", w.mean.meta.at("window")}};
    Rse.meta = {{"kind", "correction_stderr"}, {"window", w.mean.meta.at("window")}};
    emit(cfg, "correction.csv", to_csv(R));
    emit(cfg, "correction_stderr.csv", to_csv(Rse));
  }

  Json meta = to_json(cfg);
  meta["command"] = "simulate";
  meta["trajectory"] = to_json(spec);
  meta["half_space"] = half_space;
  meta["length_scale"] = L;
  meta["seed"] = est.seed;
  meta["N"] = est.waves;
  meta["M"] = est.realizations;
  meta["reference_row"] = w.reference_row;
  emit(cfg, "simulate.json", meta.dump(2) + "\n");
  return kOk;
}

// Two numeric columns (omega, W); '#' lines and a non-numeric header are skipped.
void read_spectrum_samples(const std::string& path, std::vector<double>& omega, std::vector<double>& W) {
  std::istringstream in(read_text(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(ErrorCode::Config, path + ": expected 'omega,W' rows");
    try {
      const double a = parse_double(line.substr(0, comma));
      const double b = parse_double(line.substr(comma + 1));
      omega.push_back(a);
      W.push_back(b);
    } catch (const Error&) {
      if (omega.empty()) continue;
      throw;
    }
  }
}

int cmd_localize(const Options& o) {
  const auto cfg = resolve(o);
  if (o.input.empty()) fail(ErrorCode::Config, "localize needs --input");
  Json out;
  if (o.stationary) {
    std::vector<double> omega, W;
    read_spectrum_samples(o.input, omega, W);
    const auto fit = fit_distance_stationary(omega, W, cfg.spectrum.f0, cfg.c0);
    out = to_json(fit);
  } else {
    const auto observed = wigner_from_csv(read_text(o.input));
    std::optional<WignerGrid> se;
    if (!o.stderr_input.empty()) se = wigner_from_csv(read_text(o.stderr_input));
    FitConfig fc = cfg.fit;
    if (se && o.config.empty()) fc.weights = WeightMode::InverseVariance;
    const auto fit = fit_scene(observed, se ? &*se : nullptr, fc);
    out = to_json(fit);
  }
  out["input"] = o.input;
  std::cout << out.dump(2) << "\n";
  emit(cfg, "localization.json", out.dump(2) + "\n");
  return kOk;
}

int cmd_validate(const Options& o) {
  ValidationOptions vo;
  if (o.seed) vo.seed = *o.seed;
  if (o.realizations) vo.mc_realizations = *o.realizations;
  const auto report = run_suite(o.suite, vo);
  for (const auto& r : report.results) std::cout << format_line(r) << "\n";
  std::cout << (report.passed() ? "suite passed" : "suite failed") << "\n";
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    const auto path = (fs::path(o.out) / ("validate_" + o.suite + ".json")).string();
    write_text(path, report_json(report) + "\n");
    std::cout << path << "\n";
  }
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra seen by an accelerated observer in ambient wave noise"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;
  std::size_t realizations = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "master seed (overrides the config)");
    sub->add_option("--out", o.out, "output directory (overrides the config)");
  };
  auto* spectrum = app.add_subcommand("spectrum", "analytic Planck, deformed spectrum and correction tables");
  common(spectrum);
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo autocorrelation and windowed Wigner estimates");
  common(simulate);
  simulate->add_option("--realizations", realizations, "realization count (overrides the config)");
  auto* localize = app.add_subcommand("localize", "fit the mirror pose to an observed correction grid");
  common(localize);
  localize->add_option("--input", o.input, "correction CSV, or omega,W samples with --stationary")->required();
  localize->add_option("--stderr", o.stderr_input, "standard-error CSV matching --input");
  localize->add_flag("--stationary", o.stationary, "fit the wall distance of an observer at rest");
  auto* validate = app.add_subcommand("validate", "run a validation suite");
  validate->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));
  validate->add_option("--seed", seed, "master seed");
  validate->add_option("--out", o.out, "directory for the JSON report");
  validate->add_option("--realizations", realizations, "Monte-Carlo realization count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  for (auto* sub : {spectrum, simulate, localize, validate}) {
    if (sub->count("--seed")) o.seed = seed;
  }
  if (simulate->count("--realizations") || validate->count("--realizations")) o.realizations = realizations;

  try {
    if (*spectrum) return cmd_spectrum(o);
    if (*simulate) return cmd_simulate(o);
    if (*localize) return cmd_localize(o);
    return cmd_validate(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Config:
      case ErrorCode::Io:
      case ErrorCode::InvalidParams:
        return kConfigError;
      default:
        return kFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
