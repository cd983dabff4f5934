#include "rindler/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rindler/error.hpp"

namespace rindler {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kQuadraticSteps = 10000;

double quadratic_time(double beta, double tau, double c0) {
  auto rate = [&](double s) {
    const double v = 2.0 * beta * s / c0;
    return std::sqrt(1.0 + v * v);
  };
  // RK4 on dt/dtau = rate(tau); the right-hand side does not depend on t.
  const double h = tau / kQuadraticSteps;
  double t = 0.0;
  for (int i = 0; i < kQuadraticSteps; ++i) {
    const double s = i * h;
    const double k1 = rate(s);
    const double k2 = rate(s + 0.5 * h);
    const double k4 = rate(s + h);
    t += h / 6.0 * (k1 + 4.0 * k2 + k4);
  }
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidParams, what);
}

// Five-point central derivative.
template <class F>
auto derivative(F&& f, double tau, double h) {
  const auto a = f(tau + h), b = f(tau - h), c = f(tau + 2 * h), d = f(tau - 2 * h);
  return std::pair{(8.0 * (a.t - b.t) - (c.t - d.t)) / (12.0 * h),
                   (1.0 / (12.0 * h)) * (8.0 * (a.x - b.x) - (c.x - d.x))};
}

}  // namespace

std::string kind_name(const TrajectorySpec& spec) {
  return std::visit(overloaded{
                        [](const traj::Stationary&) { return "stationary"; },
                        [](const traj::Inertial&) { return "inertial"; },
                        [](const traj::Rindler&) { return "rindler"; },
                        [](const traj::ObliqueRindler&) { return "oblique_rindler"; },
                        [](const traj::Circular&) { return "circular"; },
                        [](const traj::HelicoidConstant&) { return "helicoid_constant"; },
                        [](const traj::HelicoidAccelerated&) { return "helicoid_accelerated"; },
                        [](const traj::TestQuadratic&) { return "test_quadratic"; },
                    },
                    spec);
}

void validate(const TrajectorySpec& spec, double c0) {
  require(c0 > 0.0 && std::isfinite(c0), "c0 must be positive");
  std::visit(overloaded{
                 [](const traj::Stationary& s) {
                   require(std::isfinite(s.position.x) && std::isfinite(s.position.y) && std::isfinite(s.position.z),
                           "stationary position must be finite");
                 },
                 [&](const traj::Inertial& s) { require(std::abs(s.velocity) < c0, "inertial requires |v| < c0"); },
                 [](const traj::Rindler& s) { require(s.xi > 0.0, "rindler requires xi > 0"); },
                 [](const traj::ObliqueRindler& s) {
                   require(s.xi > 0.0, "oblique_rindler requires xi > 0");
                   require(std::abs(s.alpha) < std::numbers::pi / 2, "oblique_rindler requires |alpha| < pi/2");
                   require(s.xi0 > -s.xi * std::cos(s.alpha), "oblique_rindler requires xi0 > -xi cos(alpha)");
                 },
                 [](const traj::Circular& s) {
                   require(s.gamma > 1.0, "circular requires gamma > 1");
                   require(s.p != 0.0 && std::isfinite(s.p), "circular requires p != 0");
                 },
                 [](const traj::HelicoidConstant& s) {
                   require(s.gamma > 1.0, "helicoid_constant requires gamma > 1");
                   require(s.p != 0.0 && std::isfinite(s.p), "helicoid_constant requires p != 0");
                   require(s.mix >= 0.0 && s.mix <= 1.0, "helicoid_constant requires mix in [0, 1]");
                 },
                 [](const traj::HelicoidAccelerated& s) {
                   require(s.xi > 0.0, "helicoid_accelerated requires xi > 0");
                   require(s.p != 0.0 && std::isfinite(s.p), "helicoid_accelerated requires p != 0");
                   require(std::isfinite(s.A), "helicoid_accelerated requires finite A");
                 },
                 [](const traj::TestQuadratic& s) { require(std::isfinite(s.beta), "test_quadratic requires finite beta"); },
             },
             spec);
}

double time_scale(const TrajectorySpec& spec, double c0) {
  return std::visit(overloaded{
                        [](const traj::Stationary&) { return 1.0; },
                        [](const traj::Inertial&) { return 1.0; },
                        [&](const traj::Rindler& s) { return s.xi / c0; },
                        [&](const traj::ObliqueRindler& s) { return s.xi / c0; },
                        [](const traj::Circular& s) { return 1.0 / std::abs(s.p); },
                        [](const traj::HelicoidConstant& s) { return 1.0 / std::abs(s.p); },
                        [&](const traj::HelicoidAccelerated& s) { return std::min(s.xi / c0, 1.0 / std::abs(s.p)); },
                        [&](const traj::TestQuadratic& s) { return s.beta == 0.0 ? 1.0 : c0 / std::abs(s.beta); },
                    },
                    spec);
}

SpacetimeEvent evaluate(const TrajectorySpec& spec, double tau, double c0) {
  return std::visit(
      overloaded{
          [&](const traj::Stationary& s) { return SpacetimeEvent{tau, s.position}; },
          [&](const traj::Inertial& s) {
            const double g = 1.0 / std::sqrt(1.0 - (s.velocity / c0) * (s.velocity / c0));
            return SpacetimeEvent{g * tau, {0.0, 0.0, g * s.velocity * tau}};
          },
          [&](const traj::Rindler& s) {
            const double e = c0 * tau / s.xi;
            return SpacetimeEvent{s.xi / c0 * std::sinh(e), {0.0, 0.0, s.xi * std::cosh(e)}};
          },
          [&](const traj::ObliqueRindler& s) {
            const double e = c0 * tau / s.xi;
            const double ch = s.xi * std::cosh(e);
            return SpacetimeEvent{s.xi / c0 * std::sinh(e),
                                  {ch * std::sin(s.alpha), 0.0, s.xi0 + ch * std::cos(s.alpha)}};
          },
          [&](const traj::Circular& s) {
            const double r = c0 * std::sqrt(s.gamma * s.gamma - 1.0) / s.p;
            return SpacetimeEvent{s.gamma * tau, {r * std::cos(s.p * tau), r * std::sin(s.p * tau), 0.0}};
          },
          [&](const traj::HelicoidConstant& s) {
            const double u = c0 * std::sqrt(s.gamma * s.gamma - 1.0);
            const double r = u * std::sqrt(s.mix) / s.p;
            return SpacetimeEvent{s.gamma * tau,
                                  {r * std::cos(s.p * tau), r * std::sin(s.p * tau), u * std::sqrt(1.0 - s.mix) * tau}};
          },
          [&](const traj::HelicoidAccelerated& s) {
            const double e = c0 * tau / s.xi;
            const double k = std::sqrt(s.A * s.A + 1.0);
            const double r = c0 * s.A / s.p;
            return SpacetimeEvent{k * s.xi / c0 * std::sinh(e),
                                  {r * std::cos(s.p * tau), r * std::sin(s.p * tau), s.xi * k * std::cosh(e)}};
          },
          [&](const traj::TestQuadratic& s) {
            return SpacetimeEvent{quadratic_time(s.beta, tau, c0), {0.0, 0.0, s.beta * tau * tau}};
          },
      },
      spec);
}

Displacement displacement(const TrajectorySpec& spec, double tau, double lag, double c0) {
  const double half = 0.5 * lag;
  return std::visit(
      overloaded{
          [&](const traj::Stationary&) { return Displacement{lag, {}}; },
          [&](const traj::Inertial& s) {
            const double g = 1.0 / std::sqrt(1.0 - (s.velocity / c0) * (s.velocity / c0));
            return Displacement{g * lag, {0.0, 0.0, g * s.velocity * lag}};
          },
          [&](const traj::Rindler& s) {
            const double e = c0 * tau / s.xi, sh = std::sinh(c0 * half / s.xi);
            return Displacement{2.0 * s.xi / c0 * std::cosh(e) * sh, {0.0, 0.0, 2.0 * s.xi * std::sinh(e) * sh}};
          },
          [&](const traj::ObliqueRindler& s) {
            const double e = c0 * tau / s.xi, sh = std::sinh(c0 * half / s.xi);
            const double d = 2.0 * s.xi * std::sinh(e) * sh;
            return Displacement{2.0 * s.xi / c0 * std::cosh(e) * sh,
                                {d * std::sin(s.alpha), 0.0, d * std::cos(s.alpha)}};
          },
          [&](const traj::Circular& s) {
            const double r = c0 * std::sqrt(s.gamma * s.gamma - 1.0) / s.p;
            const double sh = 2.0 * r * std::sin(s.p * half);
            return Displacement{s.gamma * lag, {-sh * std::sin(s.p * tau), sh * std::cos(s.p * tau), 0.0}};
          },
          [&](const traj::HelicoidConstant& s) {
            const double u = c0 * std::sqrt(s.gamma * s.gamma - 1.0);
            const double sh = 2.0 * u * std::sqrt(s.mix) / s.p * std::sin(s.p * half);
            return Displacement{s.gamma * lag,
                                {-sh * std::sin(s.p * tau), sh * std::cos(s.p * tau), u * std::sqrt(1.0 - s.mix) * lag}};
          },
          [&](const traj::HelicoidAccelerated& s) {
            const double e = c0 * tau / s.xi, sh = std::sinh(c0 * half / s.xi);
            const double k = std::sqrt(s.A * s.A + 1.0);
            const double ring = 2.0 * c0 * s.A / s.p * std::sin(s.p * half);
            return Displacement{2.0 * k * s.xi / c0 * std::cosh(e) * sh,
                                {-ring * std::sin(s.p * tau), ring * std::cos(s.p * tau),
                                 2.0 * k * s.xi * std::sinh(e) * sh}};
          },
          [&](const traj::TestQuadratic&) {
            const auto a = evaluate(spec, tau + half, c0);
            const auto b = evaluate(spec, tau - half, c0);
            return Displacement{a.t - b.t, a.x - b.x};
          },
      },
      spec);
}

double proper_time_defect(const TrajectorySpec& spec, std::span<const double> tau_grid, double c0) {
  validate(spec, c0);
  if (tau_grid.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(tau_grid.begin(), tau_grid.end());
  double span = *hi - *lo;
  if (!(span > 0.0)) span = time_scale(spec, c0);
  const double h = 1e-5 * span;
  auto f = [&](double tau) { return evaluate(spec, tau, c0); };
  double worst = 0.0;
  for (double tau : tau_grid) {
    const auto [tdot, xdot] = derivative(f, tau, h);
    worst = std::max(worst, std::abs(tdot * tdot - dot(xdot, xdot) / (c0 * c0) - 1.0));
  }
  return worst;
}

double interval_function(const TrajectorySpec& spec, double tau, double lag, double c0) {
  const auto d = displacement(spec, tau, lag, c0);
  return dot(d.dx, d.dx) / (c0 * c0) - d.dt * d.dt;
}

double stationarity_defect(const TrajectorySpec& spec, std::span<const double> tau_grid,
                           std::span<const double> lag_grid, double c0) {
  validate(spec, c0);
  if (tau_grid.size() < 2 || lag_grid.empty()) fail(ErrorCode::InvalidParams, "stationarity grids are degenerate");
  double spread = 0.0, scale = 0.0;
  for (double lag : lag_grid) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double tau : tau_grid) {
      const double d = interval_function(spec, tau, lag, c0);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      scale = std::max(scale, std::abs(d));
    }
    spread = std::max(spread, hi - lo);
  }
  return scale > 0.0 ? spread / scale : 0.0;
}

double acceleration_invariant(const TrajectorySpec& spec, double tau, double c0) {
  validate(spec, c0);
  const double h = 1e-3 * time_scale(spec, c0);
  auto velocity = [&](double s) {
    auto f = [&](double u) { return evaluate(spec, u, c0); };
    const auto [tdot, xdot] = derivative(f, s, h);
    (void)tdot;
    return SpacetimeEvent{0.0, (1.0 / c0) * xdot};
  };
  const Vec3 V = velocity(tau).x;
  const Vec3 Vdot = derivative(velocity, tau, h).second;
  const double vv = dot(V, Vdot);
  return dot(Vdot, Vdot) - vv * vv / (1.0 + dot(V, V));
}

}  // namespace rindler
