#include "rindler/mirror.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rindler/core_math.hpp"
#include "rindler/error.hpp"
#include "rindler/freefield.hpp"

namespace rindler {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 / (2 cosh^2(pi nu)), underflowing to 0 for large nu.
double half_sech2(double nu) {
  const double c = std::cosh(kPi * nu);
  return 0.5 / (c * c);
}

}  // namespace

void MirrorScene::validate() const {
  if (!(xi > 0.0) || !std::isfinite(xi)) fail(ErrorCode::InvalidParams, "scene requires xi > 0");
  if (!(c0 > 0.0) || !std::isfinite(c0)) fail(ErrorCode::InvalidParams, "scene requires c0 > 0");
  if (!(std::abs(alpha) < 0.5 * kPi)) fail(ErrorCode::InvalidParams, "scene requires |alpha| < pi/2");
  if (!(xi0 > -xi * std::cos(alpha))) fail(ErrorCode::InvalidParams, "scene requires xi0 > -xi cos(alpha)");
}

Vec3 image_point(const MirrorScene& scene, double tau) {
  scene.validate();
  const double ch = scene.xi * std::cosh(scene.c0 * tau / scene.xi);
  return {ch * std::sin(scene.alpha), 0.0, -scene.xi0 - ch * std::cos(scene.alpha)};
}

AbcCoefficients abc_coefficients(double alpha, double alpha0, double eta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double sh = std::sinh(eta);
  AbcCoefficients k{sa * sa, -2.0 * alpha0 * ca * std::cosh(eta), -1.0 - alpha0 * alpha0 - ca * ca * sh * sh};
  if (!(k.A >= 0.0 && k.A < 1.0 && k.C <= -1.0 && k.A + k.C + std::abs(k.B) < 0.0)) {
    fail(ErrorCode::Inadmissible, "coefficients violate admissibility at eta = " + std::to_string(eta));
  }
  return k;
}

AbcCoefficients abc_coefficients(const MirrorScene& scene, double eta) {
  scene.validate();
  return abc_coefficients(scene.alpha, scene.alpha0(), eta);
}

double mirror_autocorr(const MirrorScene& scene, double f0, double tau, double lag) {
  scene.validate();
  if (lag == 0.0) fail(ErrorCode::ZeroLag, "mirror_autocorr is singular at zero lag");
  const double c0 = scene.c0, xi = scene.xi;
  const double K = c0 * c0 * f0 / (16.0 * kPi * kPi * xi * xi);
  const double half = 0.5 * c0 * lag / xi;
  const double sh = std::sinh(half), ch = std::cosh(half);
  const auto k = abc_coefficients(scene, c0 * tau / xi);
  return -K / (sh * sh) + K / ((k.A * ch + k.B) * ch + k.C);
}

double mirror_autocorr_regularized(const MirrorScene& scene, double f0, double eps, double tau, double lag) {
  scene.validate();
  if (!(eps > 0.0)) fail(ErrorCode::InvalidParams, "regularized autocorrelation requires eps > 0");
  const auto spec = TrajectorySpec{scene.trajectory()};
  const auto a = evaluate(spec, tau + 0.5 * lag, scene.c0);
  const auto b = evaluate(spec, tau - 0.5 * lag, scene.c0);
  const double free = rindler_autocorr_regularized(scene.xi, f0, eps, tau, lag, scene.c0);
  const double r_image = norm(image_point(scene, tau + 0.5 * lag) - b.x);
  return free - regularized_covariance(f0, eps, r_image, a.t - b.t, scene.c0);
}

namespace detail {

double correction_oblique(double alpha, double alpha0, double eta, double nu) {
  const auto k = abc_coefficients(alpha, alpha0, eta);
  const double disc = k.B * k.B - 4.0 * k.A * k.C;
  const double root = std::sqrt(disc);
  const double q = -0.5 * (k.B + std::copysign(root, k.B));
  const double r1 = q / k.A, r2 = k.C / q;
  const double c_plus = std::max(r1, r2), c_minus = std::min(r1, r2);
  const double x_plus = argcosh(c_plus), x_minus = argcosh(-c_minus);
  const double w = std::abs(nu);
  const double s = half_sech2(w);
  const double t_plus = (1.0 - s) * 2.0 * sinc(2.0 * w * x_plus) * x_over_sinh(x_plus);
  const double t_minus = s * 2.0 * sinc(2.0 * w * x_minus) * x_over_sinh(x_minus);
  return (t_plus + t_minus) / root;
}

double correction_normal(double alpha0, double eta, double nu) {
  const double ch = std::cosh(eta);
  const double a0 = std::abs(alpha0);
  // L / (ch^2 - a0^2) with L = ln(ch / a0), stable when ch is close to a0.
  const double u = (ch - a0) / a0;
  const double log_ratio = std::abs(u) < 1e-8 ? 1.0 - 0.5 * u : std::log1p(u) / u;
  const double L = std::log1p(u);
  const double weight = log_ratio / (a0 * (ch + a0));
  const double w = std::abs(nu);
  const double s = half_sech2(w);
  const double factor = alpha0 < 0.0 ? 1.0 - s : s;
  return factor * 2.0 * sinc(2.0 * w * L) * weight;
}

}  // namespace detail

Correction correction_R(double alpha, double alpha0, double eta, double nu) {
  if (!(std::abs(alpha) < 0.5 * kPi) || !(alpha0 > -std::cos(alpha))) {
    fail(ErrorCode::Inadmissible, "scene parameters outside the admissible set");
  }
  if (std::abs(alpha) >= kAlphaSwitch) return {detail::correction_oblique(alpha, alpha0, eta, nu), false};
  if (alpha0 == 0.0) return {0.0, true};
  return {detail::correction_normal(alpha0, eta, nu), false};
}

Correction correction_R(const MirrorScene& scene, double eta, double nu) {
  scene.validate();
  return correction_R(scene.alpha, scene.alpha0(), eta, nu);
}

double mirror_wigner(const MirrorScene& scene, double f0, double tau, double omega) {
  scene.validate();
  const double eta = scene.c0 * tau / scene.xi;
  const double nu = scene.xi * omega / scene.c0;
  return rindler_wigner_planck(scene.xi, f0, omega, scene.c0) * (1.0 - correction_R(scene, eta, nu).value);
}

double near_wall_limit(double alpha, double nu) {
  if (!(std::abs(alpha) < 0.5 * kPi)) fail(ErrorCode::InvalidParams, "near_wall_limit requires |alpha| < pi/2");
  const double s = half_sech2(std::abs(nu));
  if (alpha == 0.0) return 1.0 - s;
  const double t = std::tan(alpha) * std::tan(alpha);
  const double X = argcosh(1.0 + 2.0 / t);
  // sin(2 nu X) / (4 nu sqrt(1/t + 1/t^2)) = X sinc(2 nu X) t / (2 sqrt(t + 1)).
  const double inner = X * sinc(2.0 * nu * X) * t / (2.0 * std::sqrt(t + 1.0));
  return 1.0 - s * (1.0 - inner);
}

double stationary_mirror_spectrum(double d, double f0, double omega, double c0) {
  if (!(d > 0.0)) fail(ErrorCode::InvalidParams, "stationary mirror spectrum requires d > 0");
  const double x = 2.0 * omega * d / c0;
  double one_minus_sinc;
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    one_minus_sinc = x2 / 6.0 * (1.0 - x2 / 20.0);
  } else {
    one_minus_sinc = 1.0 - std::sin(x) / x;
  }
  return f0 * std::abs(omega) / (4.0 * kPi) * one_minus_sinc;
}

WignerGrid correction_grid(double alpha, double alpha0, std::span<const double> eta, std::span<const double> nu) {
  WignerGrid g({eta.begin(), eta.end()}, {nu.begin(), nu.end()});
  for (std::size_t i = 0; i < eta.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) g.at(i, j) = correction_R(alpha, alpha0, eta[i], nu[j]).value;
  }
  g.meta["kind"] = "correction";
  g.meta["window"] = "analytic";
  g.meta["alpha"] = format_double(alpha);
  g.meta["alpha0"] = format_double(alpha0);
  return g;
}

WignerGrid mirror_wigner_grid(const MirrorScene& scene, double f0, std::span<const double> eta,
                              std::span<const double> nu) {
  scene.validate();
  WignerGrid g({eta.begin(), eta.end()}, {nu.begin(), nu.end()});
  for (std::size_t i = 0; i < eta.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) {
      g.at(i, j) = mirror_wigner(scene, f0, eta[i] * scene.xi / scene.c0, nu[j] * scene.c0 / scene.xi);
    }
  }
  g.meta["kind"] = "wigner";
  g.meta["window"] = "analytic";
  return g;
}

}  // namespace rindler
