#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rindler/error.hpp"
#include "rindler/freefield.hpp"
#include "rindler/mirror.hpp"
#include "rindler/validation.hpp"

using namespace rindler;

namespace {

constexpr double kPi = std::numbers::pi;

struct RRef {
  double alpha, alpha0, eta, nu, value;
};

// mpmath, 50 digits (tests/oracles/psi_mpmath.py).
constexpr RRef kRRefs[] = {
    {0.6, 0.8, 0.0, 0.7, 0.0093093963134637703},
    {0.6, 0.8, 1.2, 1.5, 0.019165780978744098},
    {1.2, 2.0, -0.5, 0.3, 0.23383542843149224},
    {0.0, 0.8, 0.0, 0.7, 0.029275882802544882},
    {0.0, -0.5, 0.7, 1.1, 0.61513246200449961},
};

}  // namespace

TEST_CASE("correction matches the high-precision reference") {
  for (const auto& r : kRRefs) {
    CAPTURE(r.alpha);
    CAPTURE(r.alpha0);
    const auto R = correction_R(r.alpha, r.alpha0, r.eta, r.nu);
    CHECK_FALSE(R.delta);
    CHECK(R.value == doctest::Approx(r.value).epsilon(1e-9));
  }
}

TEST_CASE("oblique and normal branches join continuously") {
  const double below = correction_R(0.5 * kAlphaSwitch, 0.6, 0.3, 0.9).value;
  const double above = correction_R(2.0 * kAlphaSwitch, 0.6, 0.3, 0.9).value;
  CHECK(below == doctest::Approx(above).epsilon(1e-7));
}

TEST_CASE("correction is even in alpha and in eta") {
  CHECK(correction_R(0.7, 0.5, 0.4, 1.1).value == doctest::Approx(correction_R(-0.7, 0.5, 0.4, 1.1).value).epsilon(1e-13));
  CHECK(correction_R(0.7, 0.5, 0.4, 1.1).value == doctest::Approx(correction_R(0.7, 0.5, -0.4, 1.1).value).epsilon(1e-13));
}

TEST_CASE("wall through the horizon gives a delta") {
  const auto R = correction_R(0.0, 0.0, 0.0, 1.0);
  CHECK(R.delta);
  CHECK(R.value == 0.0);
}

TEST_CASE("correction agrees with the numeric lag transform") {
  const double alpha = 0.8, alpha0 = 0.3, eta = 0.5, nu = 1.3;
  const double W0 = rindler_wigner(1.0, 1.0, nu, 1.0);
  const double W = W0 * (1.0 - correction_R(alpha, alpha0, eta, nu).value);
  CHECK(mirror_lag_transform(alpha, alpha0, eta, nu) == doctest::Approx(W).epsilon(1e-8));
}

TEST_CASE("grazing poses are rejected") {
  CHECK_THROWS_AS(abc_coefficients(0.0, 1.0, 0.0), Error);
  CHECK_NOTHROW(abc_coefficients(kPi / 4, 0.3, 0.0));
}

TEST_CASE("image point mirrors z") {
  MirrorScene s{1.0, 0.4, 0.6, 1.0};
  const auto ev = evaluate(TrajectorySpec{s.trajectory()}, 0.8, 1.0);
  const auto im = image_point(s, 0.8);
  CHECK(im.x == doctest::Approx(ev.x.x));
  CHECK(im.z == doctest::Approx(-ev.x.z));
}

TEST_CASE("observer at rest near a wall") {
  const double d = 0.7, w = 1.9;
  const double expected = w / (4.0 * kPi) * (1.0 - std::sin(2.0 * w * d) / (2.0 * w * d));
  CHECK(stationary_mirror_spectrum(d, 1.0, w, 1.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(stationary_mirror_spectrum(d, 1.0, 0.0, 1.0) == 0.0);
}
