#include <cmath>
#include <vector>

#include <doctest.h>

#include "rindler/error.hpp"
#include "rindler/trajectory.hpp"

using namespace rindler;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

}  // namespace

TEST_CASE("analytic trajectories are parametrised by proper time") {
  const std::vector<TrajectorySpec> specs{traj::Inertial{0.6},          traj::Rindler{1.5},
                                          traj::ObliqueRindler{1.0, 0.4, 0.7}, traj::Circular{1.4, 0.8},
                                          traj::HelicoidConstant{1.3, 1.1, 0.4}, traj::HelicoidAccelerated{0.5, 1.0, 0.7}};
  const auto tau = grid(-3.0, 3.0, 31);
  for (const auto& s : specs) {
    CAPTURE(kind_name(s));
    CHECK(proper_time_defect(s, tau, 1.0) < 1e-8);
  }
}

TEST_CASE("stationary motions have a tau-independent interval") {
  const auto tau = grid(-2.0, 2.0, 21);
  const auto lag = grid(0.1, 3.0, 15);
  CHECK(stationarity_defect(traj::Rindler{1.0}, tau, lag, 1.0) < 1e-12);
  CHECK(stationarity_defect(traj::Circular{1.5, 1.0}, tau, lag, 1.0) < 1e-12);
  CHECK(stationarity_defect(traj::TestQuadratic{0.5}, tau, lag, 1.0) > 0.1);
}

TEST_CASE("Rindler interval in closed form") {
  const double xi = 2.0, lag = 1.3;
  const double expected = -4.0 * xi * xi * std::pow(std::sinh(0.5 * lag / xi), 2);
  CHECK(interval_function(traj::Rindler{xi}, 0.7, lag, 1.0) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(acceleration_invariant(traj::Rindler{xi}, 0.4, 1.0) == doctest::Approx(1.0 / (xi * xi)).epsilon(1e-7));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(validate(traj::Inertial{1.0}, 1.0), Error);
  CHECK_THROWS_AS(validate(traj::Rindler{-1.0}, 1.0), Error);
  CHECK_THROWS_AS(validate(traj::Circular{0.9, 1.0}, 1.0), Error);
}
