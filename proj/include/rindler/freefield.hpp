#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rindler/grid.hpp"
#include "rindler/quadrature.hpp"
#include "rindler/spectrum.hpp"
#include "rindler/trajectory.hpp"

namespace rindler {

// Two-point covariance of the free field for F = f0 |omega| exp(-eps |omega|),
// at spatial separation r (m) and time separation dt (s).
double regularized_covariance(double f0, double eps, double r, double dt, double c0);

// Autocorrelation <U(tau + lag/2) U(tau - lag/2)> by quadrature over omega.
double autocorr_general(const TrajectorySpec& spec, const SourceSpectrum& S, double tau, double lag,
                        const QuadratureConfig& q, double c0);

double rindler_autocorr(double xi, double f0, double lag, double c0);
double rindler_autocorr_regularized(double xi, double f0, double eps, double tau, double lag, double c0);

// (f0 / 4 pi) omega / tanh(pi xi omega / c0).
double rindler_wigner(double xi, double f0, double omega, double c0);
// (f0 |omega| / 4 pi) (1 + 2 / (exp(2 pi xi |omega| / c0) - 1)).
double rindler_wigner_planck(double xi, double f0, double omega, double c0);
// Exact lag transform of rindler_autocorr_regularized. eps = 0 falls back to rindler_wigner.
double rindler_wigner_regularized(double xi, double f0, double eps, double tau, double omega, double c0);

// Local spectrum of an inertial observer moving at v, analytic for the two-term model.
double inertial_wigner(double v, const SourceSpectrum& S, double omega, double c0);
// Same integral for an arbitrary spectrum, by quadrature.
double inertial_wigner_numeric(double v, const std::function<double(double)>& spectrum, double omega, double c0,
                               const QuadratureConfig& q = {});

double circular_autocorr(double gamma, double p, double f0, double lag, double c0);
// The bounded perturbation W_gamma(w) of the circular-motion spectrum.
double circular_wgamma(double gamma, double w, const QuadratureConfig& q = {});
// Leading order in gamma^2 - 1: (gamma^2 - 1) / (6 pi) (1 - |w|)_+^3.
double circular_wgamma_small(double gamma, double w);
double circular_wigner(double gamma, double p, double f0, double omega, const QuadratureConfig& q, double c0);

// Planck spectrum sampled on an (eta, nu) lattice.
WignerGrid planck_grid(std::span<const double> eta, std::span<const double> nu, double xi, double f0, double c0);

// Convolution in omega with the window kernel. Grid input is treated as even in nu.
WignerGrid windowed_wigner(const WignerGrid& W, const Window& window, double xi, double c0);
// Callable input W(omega) evaluated at the given angular frequencies.
std::vector<double> windowed_wigner(const std::function<double(double)>& W, std::span<const double> omega,
                                    const Window& window, const QuadratureConfig& q = {});

}  // namespace rindler
