#pragma once

#include <string>

namespace rindler {

// F(omega) = f0 |omega| exp(-eps |omega|) + f1 / |omega|.
struct SourceSpectrum {
  double f0 = 1.0;
  double f1 = 0.0;
  double eps = 0.0;
  // Infrared cutoff for the f1 term on quadrature paths; 0 means unset.
  double omega_min = 0.0;

  void validate() const;
  double operator()(double omega) const;
};

// Default infrared cutoff 1e-6 c0 / xi.
SourceSpectrum with_default_cutoff(SourceSpectrum s, double xi, double c0);

enum class WindowKind { Gaussian, Rectangular, Hann };

// Lag window chi(tau'). Gaussian: exp(-tau'^2 / (2 Tc^2)); rectangular and Hann are supported on |tau'| <= Tc.
struct Window {
  WindowKind kind = WindowKind::Gaussian;
  double Tc = 1.0;

  void validate() const;
  double operator()(double lag) const;
  // Frequency kernel chi_hat(Omega) / (2 pi); unit mass.
  double kernel(double Omega) const;
};

std::string to_string(WindowKind kind);
WindowKind window_kind_from_string(const std::string& name);

}  // namespace rindler
