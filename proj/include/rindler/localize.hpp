#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rindler/grid.hpp"

namespace rindler {

enum class WeightMode { Uniform, InverseVariance };

struct FitConfig {
  std::size_t alpha_points = 60;
  std::size_t alpha0_points = 60;
  double alpha0_max = 10.0;
  // Simplex stops once the spread of vertex objectives drops below this value.
  double tolerance = 1e-16;
  std::size_t max_evaluations = 4000;
  // Coarse minima used as simplex starts.
  std::size_t starts = 3;
  WeightMode weights = WeightMode::Uniform;
  // Root-mean-square residual below which a boundary optimum is reported as "no obstacle".
  double no_obstacle_rms = 0.05;

  void validate() const;
};

struct TracePoint {
  double alpha = 0.0;
  double alpha0 = 0.0;
  double objective = 0.0;
};

struct LocalizationResult {
  double alpha = 0.0;
  double alpha0 = 0.0;
  double residual = 0.0;
  std::size_t evaluations = 0;
  std::vector<TracePoint> trace;
  bool budget_exhausted = false;
  bool no_obstacle = false;
  // R is even in alpha, so -alpha fits equally well.
  bool sign_ambiguous = true;
};

inline constexpr double kStderrFloor = 1e-6;

double objective(const WignerGrid& observed, const WignerGrid* std_error, double alpha, double alpha0,
                 WeightMode weights);

LocalizationResult fit_scene(const WignerGrid& observed, const WignerGrid* std_error, const FitConfig& cfg);

struct DistanceFit {
  double distance = 0.0;
  double residual = 0.0;
  bool at_boundary = false;
  std::size_t evaluations = 0;
};

// Least-squares fit of (f0 |omega| / 4 pi)(1 - sinc(2 omega d / c0)) to sampled (omega, W).
DistanceFit fit_distance_stationary(std::span<const double> omega, std::span<const double> W, double f0, double c0);

}  // namespace rindler
