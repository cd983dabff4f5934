#include "rindler/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "rindler/core_math.hpp"
#include "rindler/error.hpp"

namespace rindler {

namespace {
constexpr double kPi = std::numbers::pi;
}

void SourceSpectrum::validate() const {
  if (!(f0 >= 0.0) || !(f1 >= 0.0) || !(eps >= 0.0) || !(omega_min >= 0.0)) {
    fail(ErrorCode::InvalidParams, "spectrum parameters must be non-negative");
  }
  if (!(f0 + f1 > 0.0)) fail(ErrorCode::InvalidParams, "spectrum requires f0 + f1 > 0");
}

double SourceSpectrum::operator()(double omega) const {
  const double w = std::abs(omega);
  double value = f0 * w * std::exp(-eps * w);
  if (f1 > 0.0) value += f1 / w;
  return value;
}

SourceSpectrum with_default_cutoff(SourceSpectrum s, double xi, double c0) {
  if (s.omega_min <= 0.0) s.omega_min = 1e-6 * c0 / xi;
  return s;
}

void Window::validate() const {
  if (!(Tc > 0.0) || !std::isfinite(Tc)) fail(ErrorCode::InvalidParams, "window width Tc must be positive");
}

double Window::operator()(double lag) const {
  const double u = lag / Tc;
  switch (kind) {
    case WindowKind::Gaussian: return std::exp(-0.5 * u * u);
    case WindowKind::Rectangular: return std::abs(u) <= 1.0 ? 1.0 : 0.0;
    case WindowKind::Hann: {
      if (std::abs(u) > 1.0) return 0.0;
      const double c = std::cos(0.5 * kPi * u);
      return c * c;
    }
  }
  return 0.0;
}

double Window::kernel(double Omega) const {
  const double x = Omega * Tc;
  switch (kind) {
    case WindowKind::Gaussian: return Tc / std::sqrt(2.0 * kPi) * std::exp(-0.5 * x * x);
    case WindowKind::Rectangular: return Tc / kPi * sinc(x);
    case WindowKind::Hann: {
      // chi_hat = Tc sinc(x) pi^2 / (pi^2 - x^2), with the removable points at x = +-pi.
      const double d = kPi * kPi - x * x;
      if (std::abs(std::abs(x) - kPi) < 1e-6) return Tc / (2.0 * kPi) * 0.5;
      return Tc / (2.0 * kPi) * sinc(x) * kPi * kPi / d;
    }
  }
  return 0.0;
}

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::Gaussian: return "gaussian";
    case WindowKind::Rectangular: return "rectangular";
    case WindowKind::Hann: return "hann";
  }
  return "gaussian";
}

WindowKind window_kind_from_string(const std::string& name) {
  if (name == "gaussian") return WindowKind::Gaussian;
  if (name == "rectangular" || name == "rect") return WindowKind::Rectangular;
  if (name == "hann") return WindowKind::Hann;
  fail(ErrorCode::Config, "unknown window kind '" + name + "'");
}

}  // namespace rindler
