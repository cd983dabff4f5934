#pragma once

#include <complex>
#include <cstdint>

#include "rindler/quadrature.hpp"
#include "rindler/vec3.hpp"

namespace rindler {

double sinc(double x);

// ln(x + sqrt(x^2 - 1)); inputs within a few ulp below 1 are treated as 1.
double argcosh(double x);

// x / sinh(x), equal to 1 at the origin.
double x_over_sinh(double x);

// Coefficients of the denominator a cosh^2 s + b cosh s + c.
struct PsiParams {
  double a = 0.0;
  double b = 0.0;
  double c = -1.0;

  void validate() const;
};

enum class PsiCase { General = 1, Linear = 2, Quadratic = 3, Delta = 4 };

struct PsiValue {
  double value = 0.0;
  PsiCase branch = PsiCase::General;
  // Set when a = b = 0: the integral is (2 pi / c) delta(v) and value holds 0.
  bool delta = false;
};

inline constexpr double kPsiCoefficientFloor = 1e-10;
inline constexpr double kSmallArgument = 1e-6;

// Closed form of PV integral exp(i v s) / (a cosh^2 s + b cosh s + c) over the real line.
PsiValue psi_closed(double v, const PsiParams& p);

struct PsiQuadrature {
  double real = 0.0;
  double imag = 0.0;
  double error = 0.0;
};

// Direct principal-value quadrature of the same integral over [-S, S].
PsiQuadrature psi_quadrature(double v, const PsiParams& p, const QuadratureConfig& q = {});

// exp(i k r) / (4 pi r) with k = omega / c0.
std::complex<double> green_hom(double omega, Vec3 x, Vec3 y, double c0);

struct HkReport {
  double residual = 0.0;
  double lhs = 0.0;
  std::complex<double> rhs;
  std::size_t nodes = 0;
};

// Compares Im G(x1, x2) with (omega / c0) times the sphere integral of conj(G(x1, y)) G(x2, y)
// on |y| = L, using jittered equal-area cells (one random node per cell).
HkReport hk_check(double omega, Vec3 x1, Vec3 x2, double L, std::size_t n, double c0,
                  std::uint64_t seed);

double hk_residual(double omega, Vec3 x1, Vec3 x2, double L, std::size_t n, double c0,
                   std::uint64_t seed);

}  // namespace rindler
