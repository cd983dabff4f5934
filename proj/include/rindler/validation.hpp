#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rindler {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Headline metric and the bound it is held to.
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CriterionResult> results;

  bool passed() const;
};

struct ValidationOptions {
  std::size_t mc_realizations = 2000;
  std::size_t mc_waves = 4096;
  std::uint64_t seed = 20240611;
};

// Numeric lag transform of mirror_autocorr in units xi = c0 = f0 = 1, principal value at the image pole.
double mirror_lag_transform(double alpha, double alpha0, double eta, double nu);

CriterionResult check_psi_oracle(const ValidationOptions& opt = {});
CriterionResult check_planck_spectrum(const ValidationOptions& opt = {});
CriterionResult check_montecarlo_planck(const ValidationOptions& opt = {});
CriterionResult check_mirror_oracle(const ValidationOptions& opt = {});
CriterionResult check_near_wall(const ValidationOptions& opt = {});
CriterionResult check_circular(const ValidationOptions& opt = {});
CriterionResult check_stationarity(const ValidationOptions& opt = {});
CriterionResult check_helmholtz_kirchhoff(const ValidationOptions& opt = {});
CriterionResult check_localization(const ValidationOptions& opt = {});
CriterionResult check_velocity_invariance(const ValidationOptions& opt = {});
CriterionResult check_normal_wall_case(const ValidationOptions& opt = {});
// Lag transform of the regularized Rindler autocorrelation against its closed form.
CriterionResult check_fourier_consistency(const ValidationOptions& opt = {});

// psi-oracle, fourier-consistency, planck, montecarlo-planck, mirror-oracle, near-wall, circular,
// stationarity, hk, localization, prop2, rovelli, acceptance.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const ValidationOptions& opt = {});

// One line per criterion: "[PASS] 3 name: measured ... (threshold ...) detail".
std::string format_line(const CriterionResult& r);
std::string report_json(const SuiteReport& report);

}  // namespace rindler
