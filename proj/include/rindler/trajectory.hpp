#pragma once

#include <span>
#include <string>
#include <variant>

#include "rindler/vec3.hpp"

namespace rindler {

struct SpacetimeEvent {
  double t = 0.0;
  Vec3 x;
};

namespace traj {

struct Stationary {
  Vec3 position;
};

// Uniform motion along z.
struct Inertial {
  double velocity = 0.0;
};

struct Rindler {
  double xi = 1.0;
};

// Rindler hyperbola tilted by alpha and lifted by xi0 above the plane z = 0.
struct ObliqueRindler {
  double xi = 1.0;
  double xi0 = 0.0;
  double alpha = 0.0;
};

struct Circular {
  double gamma = 1.5;
  double p = 1.0;
};

struct HelicoidConstant {
  double gamma = 1.5;
  double p = 1.0;
  double mix = 0.5;
};

struct HelicoidAccelerated {
  double A = 0.5;
  double xi = 1.0;
  double p = 1.0;
};

// z = beta tau^2; not stationary, used as a negative control.
struct TestQuadratic {
  double beta = 0.5;
};

}  // namespace traj

using TrajectorySpec = std::variant<traj::Stationary, traj::Inertial, traj::Rindler, traj::ObliqueRindler,
                                    traj::Circular, traj::HelicoidConstant, traj::HelicoidAccelerated,
                                    traj::TestQuadratic>;

std::string kind_name(const TrajectorySpec& spec);

void validate(const TrajectorySpec& spec, double c0);

// Characteristic proper-time scale of the motion, used to size finite-difference steps.
double time_scale(const TrajectorySpec& spec, double c0);

SpacetimeEvent evaluate(const TrajectorySpec& spec, double tau, double c0);

struct Displacement {
  double dt = 0.0;
  Vec3 dx;
};

// Difference between the events at tau + lag/2 and tau - lag/2, in closed form where available.
Displacement displacement(const TrajectorySpec& spec, double tau, double lag, double c0);

// max over the grid of |tdot^2 - |xdot|^2 / c0^2 - 1|.
double proper_time_defect(const TrajectorySpec& spec, std::span<const double> tau_grid, double c0);

// |dx|^2 / c0^2 - dt^2 between the events at tau +- lag/2.
double interval_function(const TrajectorySpec& spec, double tau, double lag, double c0);

// max over lags of the spread over tau of the interval, normalised by max |interval|.
double stationarity_defect(const TrajectorySpec& spec, std::span<const double> tau_grid,
                           std::span<const double> lag_grid, double c0);

// |Vdot|^2 - (V . Vdot)^2 / (1 + |V|^2) with V = xdot / c0.
double acceleration_invariant(const TrajectorySpec& spec, double tau, double c0);

}  // namespace rindler
