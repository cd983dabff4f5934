#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rindler/error.hpp"
#include "rindler/freefield.hpp"

using namespace rindler;

constexpr double kPi = std::numbers::pi;

TEST_CASE("Planck and coth forms coincide") {
  for (double w : {1e-3, 0.1, 0.7, 2.0, 9.0}) {
    CHECK(rindler_wigner(1.3, 2.0, w, 1.0) == doctest::Approx(rindler_wigner_planck(1.3, 2.0, w, 1.0)).epsilon(1e-13));
  }
  CHECK(rindler_wigner(1.0, 1.0, 0.0, 1.0) == doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-14));
}

TEST_CASE("Rindler autocorrelation in closed form") {
  const double xi = 1.0, lag = 0.8;
  const double expected = -1.0 / (16.0 * kPi * kPi * std::pow(std::sinh(0.5 * lag), 2));
  CHECK(rindler_autocorr(xi, 1.0, lag, 1.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(rindler_autocorr(xi, 1.0, 0.0, 1.0), Error);
}

TEST_CASE("regularized spectrum tends to the Planck form") {
  const double w = 1.2;
  CHECK(rindler_wigner_regularized(1.0, 1.0, 1e-6, 0.0, w, 1.0) ==
        doctest::Approx(rindler_wigner(1.0, 1.0, w, 1.0)).epsilon(1e-5));
  CHECK(rindler_wigner_regularized(1.0, 1.0, 0.0, 0.0, w, 1.0) == rindler_wigner(1.0, 1.0, w, 1.0));
}

TEST_CASE("regularized covariance at zero separation") {
  const double eps = 0.05;
  CHECK(regularized_covariance(1.0, eps, 0.0, 0.0, 1.0) ==
        doctest::Approx(1.0 / (4.0 * kPi * kPi * eps * eps)).epsilon(1e-12));
}

TEST_CASE("inertial observer sees the omega-linear spectrum unchanged") {
  SourceSpectrum S{1.0, 0.0, 0.0};
  for (double v : {0.0, 0.3, 0.9}) {
    CHECK(inertial_wigner(v, S, 1.7, 1.0) == doctest::Approx(1.7 / (4.0 * kPi)).epsilon(1e-13));
  }
  auto square = [](double w) { return w * w; };
  CHECK(inertial_wigner_numeric(0.0, square, 1.5, 1.0) !=
        doctest::Approx(inertial_wigner_numeric(0.6, square, 1.5, 1.0)).epsilon(1e-3));
}

TEST_CASE("circular perturbation at small gamma") {
  const double gamma = std::sqrt(1.0 + 1e-3);
  for (double w : {-0.5, 0.0, 0.4}) {
    CHECK(circular_wgamma(gamma, w) == doctest::Approx(circular_wgamma_small(gamma, w)).epsilon(5e-3));
  }
  CHECK(circular_wgamma_small(gamma, 1.2) == 0.0);
}

TEST_CASE("window kernels have unit mass") {
  std::vector<double> omega{0.0};
  auto flat = [](double) { return 1.0; };
  CHECK(windowed_wigner(flat, omega, Window{WindowKind::Gaussian, 1.5})[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(windowed_wigner(flat, omega, Window{WindowKind::Hann, 1.5})[0] == doctest::Approx(1.0).epsilon(1e-8));
  // The sinc kernel is cut at |Omega Tc| = 400 pi; the lost tail is about 2 / (400 pi^2).
  CHECK(windowed_wigner(flat, omega, Window{WindowKind::Rectangular, 1.5})[0] == doctest::Approx(1.0).epsilon(1e-3));
}
