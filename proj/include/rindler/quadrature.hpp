#pragma once

#include <functional>

namespace rindler {

struct QuadratureConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  // Truncation half-width for integrals over the real line.
  double half_width = 40.0;
  int max_subdivisions = 1 << 14;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a, b]. Throws NonConvergence when the error
// estimate stays above max(abs_tol, rel_tol * L1).
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& q);

// Sum of adaptive rules over panels of the given width; for long oscillatory ranges.
QuadResult integrate_panels(const Integrand& f, double a, double b, double panel,
                            const QuadratureConfig& q);

// Principal value over [a, b] with a simple pole at s0 in (a, b).
// The symmetric neighbourhood of s0 is folded so the singular parts cancel.
QuadResult integrate_pv(const Integrand& f, double a, double b, double s0,
                        const QuadratureConfig& q);
// Same, with the caller supplying folded(t) = f(s0 + t) + f(s0 - t) in a cancellation-free form.
QuadResult integrate_pv(const Integrand& f, const Integrand& folded, double a, double b, double s0,
                        const QuadratureConfig& q);

}  // namespace rindler
