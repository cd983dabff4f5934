#include "rindler/core_math.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <boost/random/uniform_01.hpp>

#include "rindler/error.hpp"

namespace rindler {

namespace {

constexpr double kPi = std::numbers::pi;

// w / tanh(pi m w), even in w, equal to 1 / (pi m) at w = 0.
double w_over_tanh(double w, double m) {
  const double y = kPi * m * std::abs(w);
  if (y < kSmallArgument) return (1.0 + y * y / 3.0) / (kPi * m);
  return std::abs(w) / std::tanh(y);
}

// w / sinh(pi w), even in w.
double w_over_sinh(double w) { return x_over_sinh(kPi * std::abs(w)) / kPi; }

double denominator(const PsiParams& p, double s) {
  const double ch = std::cosh(s);
  return (p.a * ch + p.b) * ch + p.c;
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double argcosh(double x) {
  if (std::isnan(x)) return x;
  if (x < 1.0) {
    if (x > 1.0 - 64 * std::numeric_limits<double>::epsilon()) return 0.0;
    fail(ErrorCode::DomainError, "argcosh of " + std::to_string(x));
  }
  const double t = x - 1.0;
  if (x > 1e8) return std::log(2.0 * x);
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double x_over_sinh(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) return 1.0 - ax * ax / 6.0;
  if (ax > 20.0) return 2.0 * ax * std::exp(-ax) / (1.0 - std::exp(-2.0 * ax));
  return ax / std::sinh(ax);
}

void PsiParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    fail(ErrorCode::InvalidParams, "non-finite coefficient");
  }
  if (a < 0.0 || a >= 1.0) fail(ErrorCode::InvalidParams, "a must lie in [0, 1), got " + std::to_string(a));
  if (c > -1.0) fail(ErrorCode::InvalidParams, "c must be <= -1, got " + std::to_string(c));
  if (!(a + c + std::abs(b) < 0.0)) fail(ErrorCode::InvalidParams, "a + c + |b| must be negative");
}

PsiValue psi_closed(double v, const PsiParams& p) {
  p.validate();
  const double w = std::abs(v);
  const bool a_zero = p.a < kPsiCoefficientFloor;
  const bool b_zero = std::abs(p.b) < kPsiCoefficientFloor;

  if (a_zero && b_zero) return {0.0, PsiCase::Delta, true};

  if (a_zero) {
    const double x = argcosh(std::abs(p.c / p.b));
    const double shape = sinc(w * x) * x_over_sinh(x);
    const double kernel = p.b < 0.0 ? w_over_sinh(w) : w_over_tanh(w, 1.0);
    return {-2.0 * kPi / std::abs(p.b) * shape * kernel, PsiCase::Linear, false};
  }

  if (b_zero) {
    const double r = std::sqrt(-p.c / p.a);
    const double x = argcosh(r);
    const double shape = sinc(w * x) * x_over_sinh(x);
    return {-kPi / (p.a * r) * shape * w_over_tanh(w, 0.5), PsiCase::Quadratic, false};
  }

  const double disc = p.b * p.b - 4.0 * p.a * p.c;
  const double root = std::sqrt(disc);
  const double q = -0.5 * (p.b + std::copysign(root, p.b));
  const double r1 = q / p.a;
  const double r2 = p.c / q;
  const double c_plus = std::max(r1, r2);
  const double c_minus = std::min(r1, r2);
  const double x_plus = argcosh(c_plus);
  const double x_minus = argcosh(-c_minus);
  const double t_plus = sinc(w * x_plus) * x_over_sinh(x_plus) * w_over_tanh(w, 1.0);
  const double t_minus = sinc(w * x_minus) * x_over_sinh(x_minus) * w_over_sinh(w);
  return {-2.0 * kPi / root * (t_plus + t_minus), PsiCase::General, false};
}

PsiQuadrature psi_quadrature(double v, const PsiParams& p, const QuadratureConfig& q) {
  p.validate();
  q.validate();
  const bool a_zero = p.a < kPsiCoefficientFloor;
  const bool b_zero = std::abs(p.b) < kPsiCoefficientFloor;
  if (a_zero && b_zero) fail(ErrorCode::DomainError, "a = b = 0 is a delta distribution in v");

  // Extend the truncation until the analytic tail bound drops below a tenth of the tolerance.
  double S = q.half_width;
  auto tail = [&](double s) {
    return p.a > 0.0 ? 8.0 * std::exp(-2.0 * s) / p.a : 4.0 * std::exp(-s) / std::abs(p.b);
  };
  while (tail(S) > 0.1 * q.abs_tol && S < 700.0) S += 5.0;

  // Real zero of the denominator with cosh s >= 1, if any, and the remaining factor F with
  // D(s) = F(s) (cosh s - cosh s0).
  double pole = -1.0;
  double other_root = 0.0;
  if (a_zero) {
    if (p.b > 0.0) pole = argcosh(-p.c / p.b);
  } else {
    const double disc = p.b * p.b - 4.0 * p.a * p.c;
    const double qq = -0.5 * (p.b + std::copysign(std::sqrt(disc), p.b));
    const double c_plus = b_zero ? std::sqrt(-p.c / p.a) : std::max(qq / p.a, p.c / qq);
    other_root = b_zero ? -c_plus : std::min(qq / p.a, p.c / qq);
    pole = argcosh(c_plus);
  }
  auto factor = [&](double s) { return a_zero ? p.b : p.a * (std::cosh(s) - other_root); };
  // cosh(s0 + t) - cosh(s0), exact zero at t = 0.
  auto shifted = [&](double t) { return 2.0 * std::sinh(pole + 0.5 * t) * std::sinh(0.5 * t); };

  auto even = [&](double s) { return std::cos(v * s) / denominator(p, s); };
  auto odd = [&](double s) { return std::sin(v * s) / denominator(p, s); };
  auto odd_neg = [&](double s) { return odd(-s); };
  auto fold = [&](auto trig) {
    return [&, trig](double t) {
      return trig(pole + t) / (factor(pole + t) * shifted(t)) + trig(pole - t) / (factor(pole - t) * shifted(-t));
    };
  };
  auto cos_v = [&](double s) { return std::cos(v * s); };
  auto sin_v = [&](double s) { return std::sin(v * s); };
  auto sin_neg = [&](double s) { return -std::sin(v * s); };

  auto run = [&](const Integrand& f, const Integrand& folded) {
    if (pole > 0.0 && pole < S) return integrate_pv(f, folded, 0.0, S, pole, q);
    return integrate(f, 0.0, S, q);
  };

  PsiQuadrature out;
  const auto re = run(even, fold(cos_v));
  out.real = 2.0 * re.value;
  out.error = 2.0 * re.error;
  // The two half-line sine integrals are evaluated independently; their sum is the imaginary part.
  const auto im_pos = run(odd, fold(sin_v));
  const auto im_neg = run(odd_neg, fold(sin_neg));
  out.imag = im_pos.value + im_neg.value;
  return out;
}

std::complex<double> green_hom(double omega, Vec3 x, Vec3 y, double c0) {
  const double r = norm(x - y);
  if (!(r > 0.0)) fail(ErrorCode::CoincidentPoints, "Green's function at coincident points");
  return std::polar(1.0 / (4.0 * kPi * r), omega / c0 * r);
}

HkReport hk_check(double omega, Vec3 x1, Vec3 x2, double L, std::size_t n, double c0,
                  std::uint64_t seed) {
  if (!(L > 0.0) || n == 0 || !(c0 > 0.0)) fail(ErrorCode::InvalidParams, "hk_check needs L > 0, n > 0, c0 > 0");
  const double k = omega / c0;
  const auto nz = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(std::sqrt(n / kPi))));
  const auto nphi = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(double(n) / double(nz))));
  const std::size_t total = nz * nphi;
  std::mt19937_64 gen(seed);
  boost::random::uniform_01<double> u01;

  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < nz; ++i) {
    for (std::size_t j = 0; j < nphi; ++j) {
      const double z = -1.0 + 2.0 * (double(i) + u01(gen)) / double(nz);
      const double phi = 2.0 * kPi * (double(j) + u01(gen)) / double(nphi);
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Vec3 y{L * rho * std::cos(phi), L * rho * std::sin(phi), L * z};
      sum += std::conj(green_hom(omega, x1, y, c0)) * green_hom(omega, x2, y, c0);
    }
  }
  HkReport rep;
  rep.nodes = total;
  rep.rhs = k * sum * (4.0 * kPi * L * L / double(total));
  const double r12 = norm(x1 - x2);
  rep.lhs = k / (4.0 * kPi) * sinc(k * r12);
  const double scale = std::abs(rep.lhs) < 1e-3 * std::abs(k) / (4.0 * kPi) ? std::abs(k) / (4.0 * kPi)
                                                                             : std::abs(rep.lhs);
  rep.residual = std::abs(rep.rhs - rep.lhs) / scale;
  return rep;
}

double hk_residual(double omega, Vec3 x1, Vec3 x2, double L, std::size_t n, double c0,
                   std::uint64_t seed) {
  return hk_check(omega, x1, x2, L, n, c0, seed).residual;
}

}  // namespace rindler
