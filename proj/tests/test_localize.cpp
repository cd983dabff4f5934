#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "rindler/error.hpp"
#include "rindler/localize.hpp"
#include "rindler/mirror.hpp"

using namespace rindler;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

}  // namespace

TEST_CASE("noiseless pose is recovered") {
  const double alpha = 0.7, alpha0 = 1.2;
  const auto observed = correction_grid(alpha, alpha0, grid(-2.0, 2.0, 9), grid(0.3, 3.0, 12));
  const auto fit = fit_scene(observed, nullptr, FitConfig{});
  CHECK(std::abs(std::abs(fit.alpha) - alpha) < 1e-3);
  CHECK(std::abs(fit.alpha0 - alpha0) < 1e-3);
  CHECK(fit.residual < 1e-8);
  CHECK(fit.sign_ambiguous);
  CHECK_FALSE(fit.no_obstacle);
}

TEST_CASE("objective vanishes at the true pose") {
  const auto observed = correction_grid(0.4, 0.9, grid(-1.0, 1.0, 5), grid(0.5, 2.0, 6));
  CHECK(objective(observed, nullptr, 0.4, 0.9, WeightMode::Uniform) < 1e-24);
  CHECK(objective(observed, nullptr, 0.5, 0.9, WeightMode::Uniform) > 1e-8);
}

TEST_CASE("wall distance of an observer at rest") {
  const double d = 0.8;
  std::vector<double> omega, W;
  for (double w : grid(0.2, 6.0, 40)) {
    omega.push_back(w);
    W.push_back(stationary_mirror_spectrum(d, 1.0, w, 1.0));
  }
  const auto fit = fit_distance_stationary(omega, W, 1.0, 1.0);
  CHECK(fit.distance == doctest::Approx(d).epsilon(1e-6));
  CHECK_FALSE(fit.at_boundary);
}

TEST_CASE("fit configuration is validated") {
  FitConfig cfg;
  cfg.alpha_points = 1;
  CHECK_THROWS_AS(cfg.validate(), Error);
}
