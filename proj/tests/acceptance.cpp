#include <cstdio>
#include <cstdlib>
#include <string>

#include "rindler/validation.hpp"

using namespace rindler;

int main() {
  ValidationOptions opt;
  if (const char* m = std::getenv("RINDLER_PROBE_MC_REALIZATIONS")) opt.mc_realizations = std::stoul(m);
  using Check = CriterionResult (*)(const ValidationOptions&);
  const Check checks[] = {check_psi_oracle,          check_planck_spectrum, check_montecarlo_planck,
                          check_mirror_oracle,       check_near_wall,       check_circular,
                          check_stationarity,        check_helmholtz_kirchhoff, check_localization,
                          check_velocity_invariance, check_normal_wall_case};
  int failed = 0;
  for (auto check : checks) {
    CriterionResult r;
    try {
      r = check(opt);
    } catch (const std::exception& e) {
      r.name = "exception";
      r.detail = e.what();
    }
    std::printf("%s\n", format_line(r).c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
