#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rindler/grid.hpp"
#include "rindler/spectrum.hpp"
#include "rindler/trajectory.hpp"

namespace rindler {

// Finite plane-wave superposition; structure of arrays for the field kernel.
struct PlaneWaveEnsemble {
  std::vector<double> kx, ky, kz, omega;
  std::vector<double> re, im;
  std::uint64_t seed = 0;
  bool half_space = false;
  double c0 = 1.0;
  // E|a_j|^2, already halved for the half-space construction.
  double amplitude_variance = 0.0;

  std::size_t size() const { return kx.size(); }
};

// splitmix64 expansion of a master seed into the seed of stream `index`.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

PlaneWaveEnsemble sample_ensemble(const SourceSpectrum& S, std::size_t n, std::uint64_t seed, bool half_space,
                                  double c0);

double field_at(const PlaneWaveEnsemble& e, const SpacetimeEvent& ev);
void field_along(const PlaneWaveEnsemble& e, std::span<const SpacetimeEvent> events, std::span<double> out);

struct EstimatorConfig {
  std::size_t realizations = 2000;
  std::size_t waves = 4096;
  std::vector<double> tau;
  // Uniform lags starting at 0.
  std::vector<double> lag;
  Window window;
  std::uint64_t seed = 1;

  void validate() const;
};

struct AutocorrEstimate {
  CorrelationGrid mean;
  CorrelationGrid std_error;
};

struct WignerEstimate {
  AutocorrEstimate autocorr;
  // Axes hold eta = c0 tau / xi and nu = xi omega / c0 for the supplied length scale.
  WignerGrid mean;
  WignerGrid std_error;
  // Paired per-realization differences W(tau_i) - W(tau_ref), tau_ref the tau closest to 0.
  WignerGrid flatness;
  WignerGrid flatness_stderr;
  std::size_t reference_row = 0;
};

// Worker count: hardware concurrency capped by RINDLER_PROBE_THREADS.
std::size_t worker_count();

// Runs body(i) for i in [0, n) on the worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

AutocorrEstimate estimate_autocorr(const SourceSpectrum& S, const TrajectorySpec& spec, const EstimatorConfig& cfg,
                                   bool half_space, double c0);

WignerEstimate estimate_wigner(const SourceSpectrum& S, const TrajectorySpec& spec, const EstimatorConfig& cfg,
                               std::span<const double> omega, bool half_space, double c0, double length_scale);

struct CovarianceCheck {
  double residual = 0.0;
  double estimate = 0.0;
  double target = 0.0;
  double variance = 0.0;
};

// Monte-Carlo two-point covariance against the analytic target, normalised by the
// single-point variance. Each realization is averaged over `shifts` random translations
// (time and space; time, x and y for the half-space).
CovarianceCheck covariance_check(const SourceSpectrum& S, std::size_t n, std::size_t m, const SpacetimeEvent& a,
                                 const SpacetimeEvent& b, bool half_space, std::uint64_t seed, double c0,
                                 std::size_t shifts = 256);

double covariance_residual(const SourceSpectrum& S, std::size_t n, std::size_t m, const SpacetimeEvent& a,
                           const SpacetimeEvent& b, bool half_space, std::uint64_t seed, double c0);

}  // namespace rindler
