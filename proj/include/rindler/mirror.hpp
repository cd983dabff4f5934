#pragma once

#include <span>

#include "rindler/grid.hpp"
#include "rindler/trajectory.hpp"

namespace rindler {

// Dirichlet plane z = 0 observed from an oblique Rindler trajectory.
struct MirrorScene {
  double xi = 1.0;
  double xi0 = 0.0;
  double alpha = 0.0;
  double c0 = 1.0;

  double alpha0() const { return xi0 / xi; }
  void validate() const;
  traj::ObliqueRindler trajectory() const { return {xi, xi0, alpha}; }
};

struct AbcCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = -1.0;
};

inline constexpr double kAlphaSwitch = 1e-4;

// Reflection of the observer position at proper time tau across z = 0.
Vec3 image_point(const MirrorScene& scene, double tau);

AbcCoefficients abc_coefficients(const MirrorScene& scene, double eta);
AbcCoefficients abc_coefficients(double alpha, double alpha0, double eta);

// Closed-form autocorrelation in the presence of the mirror (eps = 0).
double mirror_autocorr(const MirrorScene& scene, double f0, double tau, double lag);
// Free term minus image term, each with the regularized two-point covariance.
double mirror_autocorr_regularized(const MirrorScene& scene, double f0, double eps, double tau, double lag);

struct Correction {
  double value = 0.0;
  // alpha = alpha0 = 0: the correction is a delta at nu = 0 and value holds 0.
  bool delta = false;
};

// Relative deformation R(eta, nu) of the Planck spectrum.
Correction correction_R(double alpha, double alpha0, double eta, double nu);
Correction correction_R(const MirrorScene& scene, double eta, double nu);

namespace detail {
// Oblique-incidence closed form, valid for alpha != 0.
double correction_oblique(double alpha, double alpha0, double eta, double nu);
// Normal-incidence closed form, alpha0 != 0.
double correction_normal(double alpha0, double eta, double nu);
}  // namespace detail

// W0(omega) (1 - R(c0 tau / xi, xi omega / c0)).
double mirror_wigner(const MirrorScene& scene, double f0, double tau, double omega);

// Correction at closest approach when the trajectory grazes the wall.
double near_wall_limit(double alpha, double nu);

// (f0 |omega| / 4 pi) (1 - sinc(2 omega d / c0)) for an observer at rest at distance d.
double stationary_mirror_spectrum(double d, double f0, double omega, double c0);

WignerGrid correction_grid(double alpha, double alpha0, std::span<const double> eta, std::span<const double> nu);
WignerGrid mirror_wigner_grid(const MirrorScene& scene, double f0, std::span<const double> eta,
                              std::span<const double> nu);

}  // namespace rindler
