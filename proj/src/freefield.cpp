#include "rindler/freefield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gsl/gsl_sf_expint.h>

#include "rindler/core_math.hpp"
#include "rindler/error.hpp"

namespace rindler {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral of sin(a w) / w^2 over [m, inf).
double sine_over_square_tail(double a, double m) {
  if (a == 0.0) return 0.0;
  return std::sin(a * m) / m - a * gsl_sf_Ci(std::abs(a) * m);
}

// Integral of cos(b s) / s^2 over [S, inf), b >= 0.
double cosine_over_square_tail(double b, double S) {
  if (b == 0.0) return 1.0 / S;
  return std::cos(b * S) / S - b * (0.5 * kPi - gsl_sf_Si(b * S));
}

// s^2 - sin^2 s without cancellation near the origin.
double square_minus_sine_square(double s) {
  if (std::abs(s) < 0.5) {
    // sum_{n >= 2} (-1)^n 2^(2n-1) s^(2n) / (2n)!
    const double s2 = s * s;
    double term = 8.0 * s2 * s2 / 24.0;
    double sum = term;
    for (int n = 3; n <= 14; ++n) {
      term *= -4.0 * s2 / ((2.0 * n) * (2.0 * n - 1.0));
      sum += term;
    }
    return sum;
  }
  const double sn = std::sin(s);
  return s * s - sn * sn;
}

// sinh(nu theta) / sinh(pi nu) with theta = pi - phi, nu >= 0.
double sinh_ratio(double nu, double theta, double phi) {
  if (nu == 0.0) return theta / kPi;
  return std::exp(-nu * phi) * (-std::expm1(-2.0 * nu * theta)) / (-std::expm1(-2.0 * kPi * nu));
}

// nu cosh(nu theta) / sinh(pi nu), nu >= 0.
double nu_cosh_ratio(double nu, double theta, double phi) {
  if (nu < 1e-12) return 1.0 / kPi;
  return std::exp(-nu * phi) * (1.0 + std::exp(-2.0 * nu * theta)) * nu / (-std::expm1(-2.0 * kPi * nu));
}

struct Arc {
  double theta, phi, q;
};

// theta = arccos(x - 1) computed from phi = 2 asin(sqrt(x / 2)) = pi - theta.
Arc arc(double x) {
  const double phi = 2.0 * std::asin(std::sqrt(0.5 * x));
  return {kPi - phi, phi, std::sqrt(x * (2.0 - x))};
}

double g_fn(double x, double nu) {
  const auto a = arc(x);
  return sinh_ratio(nu, a.theta, a.phi) / a.q;
}

double g_prime(double x, double nu) {
  const auto a = arc(x);
  return (-nu_cosh_ratio(nu, a.theta, a.phi) - sinh_ratio(nu, a.theta, a.phi) * (1.0 - x) / a.q) / (a.q * a.q);
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
  std::vector<double> w(x.size(), 0.0);
  if (x.size() == 1) {
    w[0] = 1.0;
    return w;
  }
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = 0.5 * (x[i + 1] - x[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

}  // namespace

double regularized_covariance(double f0, double eps, double r, double dt, double c0) {
  const double rr = r / c0;
  const double d1 = (rr + dt) * (rr + dt) + eps * eps;
  const double d2 = (rr - dt) * (rr - dt) + eps * eps;
  return f0 * (rr * rr - dt * dt + eps * eps) / (4.0 * kPi * kPi * d1 * d2);
}

double autocorr_general(const TrajectorySpec& spec, const SourceSpectrum& S, double tau, double lag,
                        const QuadratureConfig& q, double c0) {
  validate(spec, c0);
  S.validate();
  q.validate();
  if (S.f0 > 0.0 && !(S.eps > 0.0)) fail(ErrorCode::InvalidParams, "f0 > 0 requires eps > 0 for integrability");
  if (S.f1 > 0.0 && !(S.omega_min > 0.0)) fail(ErrorCode::MissingCutoff, "f1 > 0 requires an infrared cutoff");

  const auto d = displacement(spec, tau, lag, c0);
  const double r = norm(d.dx) / c0;
  const double dt = d.dt;
  double value = 0.0;

  if (S.f0 > 0.0) {
    const double top = 60.0 / S.eps;
    const double freq = r + std::abs(dt);
    const double panel = std::min(5.0 / S.eps, freq > 0.0 ? 4.0 * kPi / freq : top);
    auto f = [&](double w) { return S.f0 * w * std::exp(-S.eps * w) * sinc(w * r) * std::cos(w * dt); };
    value += integrate_panels(f, 0.0, top, panel, q).value / (4.0 * kPi * kPi);
  }

  if (S.f1 > 0.0) {
    const double m = S.omega_min;
    double part;
    if (r < 1e-12 * (std::abs(dt) + 1e-300)) {
      if (dt == 0.0) fail(ErrorCode::DomainError, "f1 variance diverges at zero separation");
      part = -gsl_sf_Ci(std::abs(dt) * m);
    } else {
      part = 0.5 / r * (sine_over_square_tail(r + dt, m) + sine_over_square_tail(r - dt, m));
    }
    value += S.f1 * part / (4.0 * kPi * kPi);
  }
  return value;
}

double rindler_autocorr(double xi, double f0, double lag, double c0) {
  if (lag == 0.0) fail(ErrorCode::ZeroLag, "rindler_autocorr is singular at zero lag");
  const double sh = std::sinh(c0 * lag / (2.0 * xi));
  return -c0 * c0 * f0 / (16.0 * kPi * kPi * xi * xi) / (sh * sh);
}

double rindler_autocorr_regularized(double xi, double f0, double eps, double tau, double lag, double c0) {
  if (!(eps > 0.0)) fail(ErrorCode::InvalidParams, "regularized autocorrelation requires eps > 0");
  const double eta = c0 * tau / xi;
  const double sh = 2.0 * xi / c0 * std::sinh(c0 * lag / (2.0 * xi));
  const double s = sh * sh;
  const double e2 = eps * eps;
  const double dp = s * std::exp(2.0 * eta) + e2;
  const double dm = s * std::exp(-2.0 * eta) + e2;
  return f0 * (e2 - s) / (4.0 * kPi * kPi * dp * dm);
}

double rindler_wigner(double xi, double f0, double omega, double c0) {
  const double x = kPi * xi * omega / c0;
  if (std::abs(x) < kSmallArgument) return f0 / (4.0 * kPi) * c0 / (kPi * xi) * (1.0 + x * x / 3.0);
  return f0 / (4.0 * kPi) * omega / std::tanh(x);
}

double rindler_wigner_planck(double xi, double f0, double omega, double c0) {
  const double w = std::abs(omega);
  const double x = 2.0 * kPi * xi * w / c0;
  if (x < kSmallArgument) return f0 / (4.0 * kPi) * c0 / (kPi * xi) * (1.0 + x * x / 12.0);
  return f0 * w / (4.0 * kPi) * (1.0 + 2.0 / std::expm1(x));
}

double rindler_wigner_regularized(double xi, double f0, double eps, double tau, double omega, double c0) {
  if (eps < 0.0) fail(ErrorCode::InvalidParams, "eps must be non-negative");
  if (eps == 0.0) return rindler_wigner(xi, f0, omega, c0);
  const double eta = c0 * tau / xi;
  const double nu = std::abs(xi * omega / c0);
  const double x0 = c0 * c0 * eps * eps / (2.0 * xi * xi);
  const double xm = x0 * std::exp(-2.0 * std::abs(eta));
  const double xp = x0 * std::exp(2.0 * std::abs(eta));
  if (!(xp < 2.0)) {
    fail(ErrorCode::DomainError, "eps too large for eta: arccos argument leaves [-1, 1]");
  }
  const double pref = f0 * c0 / (4.0 * kPi * xi);
  if (std::abs(eta) < 3e-5) return pref * (-2.0 * x0 * g_prime(x0, nu) - g_fn(x0, nu));
  const double a = std::abs(eta);
  return pref * (g_fn(xm, nu) / std::expm1(2.0 * a) + g_fn(xp, nu) / std::expm1(-2.0 * a));
}

double inertial_wigner(double v, const SourceSpectrum& S, double omega, double c0) {
  S.validate();
  if (!(std::abs(v) < c0)) fail(ErrorCode::InvalidParams, "inertial observer requires |v| < c0");
  if (!(omega > 0.0)) fail(ErrorCode::InvalidParams, "inertial_wigner requires omega > 0");
  if (S.eps == 0.0 || v == 0.0) {
    // For F = f0 |w| + f1 / |w| the band integral divided by 8 pi gamma beta is F(omega) / (4 pi) for every v.
    return S(omega) / (4.0 * kPi);
  }
  const double beta = std::abs(v) / c0;
  const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  const double lo = omega / (gamma * (1.0 + beta));
  const double hi = omega / (gamma * (1.0 - beta));
  const double f0_part = S.f0 * std::exp(-S.eps * lo) * (-std::expm1(-S.eps * (hi - lo))) / S.eps;
  const double f1_part = S.f1 * (1.0 / lo - 1.0 / hi);
  return (f0_part + f1_part) / (8.0 * kPi * gamma * beta);
}

double inertial_wigner_numeric(double v, const std::function<double(double)>& spectrum, double omega, double c0,
                               const QuadratureConfig& q) {
  if (!(std::abs(v) < c0)) fail(ErrorCode::InvalidParams, "inertial observer requires |v| < c0");
  if (!(omega > 0.0)) fail(ErrorCode::InvalidParams, "inertial_wigner requires omega > 0");
  if (v == 0.0) return spectrum(omega) / (4.0 * kPi);
  const double beta = std::abs(v) / c0;
  const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  const double lo = omega / (gamma * (1.0 + beta));
  const double hi = omega / (gamma * (1.0 - beta));
  auto f = [&](double w) { return spectrum(w) / w; };
  return integrate(f, lo, hi, q).value / (8.0 * kPi * gamma * beta);
}

double circular_autocorr(double gamma, double p, double f0, double lag, double c0) {
  (void)c0;
  if (lag == 0.0) fail(ErrorCode::ZeroLag, "circular_autocorr is singular at zero lag");
  if (!(gamma > 1.0)) fail(ErrorCode::InvalidParams, "circular motion requires gamma > 1");
  const double sn = std::sin(0.5 * p * lag);
  const double den = 4.0 * (gamma * gamma - 1.0) / (p * p) * sn * sn - gamma * gamma * lag * lag;
  return f0 / (4.0 * kPi * kPi) / den;
}

double circular_wgamma(double gamma, double w, const QuadratureConfig& q) {
  if (!(gamma > 1.0)) fail(ErrorCode::InvalidParams, "circular motion requires gamma > 1");
  const double g2 = gamma * gamma;
  const double k = g2 - 1.0;
  const double b = 2.0 * std::abs(w);
  auto h = [&](double s) {
    const double m = square_minus_sine_square(s);
    if (s == 0.0) return 1.0 / 3.0;
    const double s2 = s * s;
    return m / (s2 * (s2 + k * m)) * std::cos(b * s);
  };
  const double S = 128.0 * kPi;
  const double panel = kPi / std::max(1.0, std::abs(w));
  const double body = integrate_panels(h, 0.0, S, panel, q).value;
  const double tail = cosine_over_square_tail(b, S) / g2;
  return k / (4.0 * kPi * kPi) * 2.0 * (body + tail);
}

double circular_wgamma_small(double gamma, double w) {
  const double u = std::max(0.0, 1.0 - std::abs(w));
  return (gamma * gamma - 1.0) / (6.0 * kPi) * u * u * u;
}

double circular_wigner(double gamma, double p, double f0, double omega, const QuadratureConfig& q, double c0) {
  (void)c0;
  const double ap = std::abs(p);
  return f0 * std::abs(omega) / (4.0 * kPi) + f0 * ap / (4.0 * kPi) * circular_wgamma(gamma, omega / ap, q);
}

WignerGrid planck_grid(std::span<const double> eta, std::span<const double> nu, double xi, double f0, double c0) {
  WignerGrid g({eta.begin(), eta.end()}, {nu.begin(), nu.end()});
  for (std::size_t i = 0; i < eta.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) g.at(i, j) = rindler_wigner(xi, f0, nu[j] * c0 / xi, c0);
  }
  g.meta["kind"] = "planck";
  g.meta["window"] = "analytic";
  return g;
}

WignerGrid windowed_wigner(const WignerGrid& W, const Window& window, double xi, double c0) {
  W.check();
  window.validate();
  // Kernel in nu units: the lag window in eta' = c0 tau' / xi.
  const Window scaled{window.kind, window.Tc * c0 / xi};
  std::vector<double> nu_ext, idx_ext;
  const bool mirror = !W.nu.empty() && W.nu.front() >= 0.0;
  if (mirror) {
    for (std::size_t j = W.nu.size(); j-- > 0;) {
      if (W.nu[j] > 0.0) {
        nu_ext.push_back(-W.nu[j]);
        idx_ext.push_back(double(j));
      }
    }
  }
  for (std::size_t j = 0; j < W.nu.size(); ++j) {
    nu_ext.push_back(W.nu[j]);
    idx_ext.push_back(double(j));
  }
  const auto wts = trapezoid_weights(nu_ext);
  WignerGrid out = W;
  out.meta["window"] = to_string(window.kind) + ":" + format_double(window.Tc);
  for (std::size_t i = 0; i < W.eta.size(); ++i) {
    for (std::size_t j = 0; j < W.nu.size(); ++j) {
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < nu_ext.size(); ++k) {
        const double kw = scaled.kernel(W.nu[j] - nu_ext[k]) * wts[k];
        num += kw * W.at(i, static_cast<std::size_t>(idx_ext[k]));
        den += kw;
      }
      out.at(i, j) = num / den;
    }
  }
  return out;
}

std::vector<double> windowed_wigner(const std::function<double(double)>& W, std::span<const double> omega,
                                    const Window& window, const QuadratureConfig& q) {
  window.validate();
  std::vector<double> out;
  out.reserve(omega.size());
  for (double w : omega) {
    auto f = [&](double x) { return W(w - x / window.Tc) * window.kernel(x / window.Tc) / window.Tc; };
    double value;
    if (window.kind == WindowKind::Gaussian) {
      value = integrate(f, -12.0, 0.0, q).value + integrate(f, 0.0, 12.0, q).value;
    } else {
      // Symmetric truncation at |Omega Tc| = 400 pi.
      const double X = 400.0 * kPi;
      value = integrate_panels(f, -X, X, kPi, q).value;
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace rindler
