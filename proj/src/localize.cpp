#include "rindler/localize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/tools/minima.hpp>

#include "rindler/error.hpp"
#include "rindler/mirror.hpp"
#include "rindler/montecarlo.hpp"

namespace rindler {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool admissible(double alpha, double alpha0) {
  return std::abs(alpha) < 0.5 * kPi && alpha0 > -std::cos(alpha);
}

struct Vertex {
  double alpha, alpha0, f;
};

}  // namespace

void FitConfig::validate() const {
  if (alpha_points < 2 || alpha0_points < 2) fail(ErrorCode::InvalidParams, "fit grids need at least 2 points");
  if (!(alpha0_max > 0.0)) fail(ErrorCode::InvalidParams, "alpha0_max must be positive");
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidParams, "refinement tolerance must be positive");
  if (max_evaluations < 10) fail(ErrorCode::InvalidParams, "evaluation budget too small");
  if (starts < 1) fail(ErrorCode::InvalidParams, "need at least one simplex start");
}

double objective(const WignerGrid& observed, const WignerGrid* std_error, double alpha, double alpha0,
                 WeightMode weights) {
  observed.check();
  if (!admissible(alpha, alpha0)) fail(ErrorCode::Inadmissible, "inadmissible (alpha, alpha0)");
  const bool inverse = weights == WeightMode::InverseVariance && std_error != nullptr;
  if (inverse && std_error->values.size() != observed.values.size()) {
    fail(ErrorCode::InvalidParams, "stderr grid does not match the observation grid");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < observed.eta.size(); ++i) {
    for (std::size_t j = 0; j < observed.nu.size(); ++j) {
      const double r = correction_R(alpha, alpha0, observed.eta[i], observed.nu[j]).value;
      const double d = observed.at(i, j) - r;
      double w = 1.0;
      if (inverse) {
        const double se = std::max(kStderrFloor, std_error->at(i, j));
        w = 1.0 / (se * se);
      }
      sum += w * d * d;
    }
  }
  return sum;
}

LocalizationResult fit_scene(const WignerGrid& observed, const WignerGrid* std_error, const FitConfig& cfg) {
  cfg.validate();
  observed.check();
  if (observed.eta.empty() || observed.nu.empty()) fail(ErrorCode::InvalidParams, "empty observation grid");
  const auto [eta_lo, eta_hi] = std::minmax_element(observed.eta.begin(), observed.eta.end());
  const double nu_hi = *std::max_element(observed.nu.begin(), observed.nu.end());
  if (*eta_lo > -2.0 + 1e-9 || *eta_hi < 2.0 - 1e-9 || nu_hi < 3.0 - 1e-9) {
    fail(ErrorCode::InvalidParams, "observation must span eta in [-2, 2] and nu up to 3");
  }
  const WeightMode mode = std_error ? cfg.weights : WeightMode::Uniform;

  LocalizationResult res;
  std::size_t evals = 0;
  auto f = [&](double a, double a0) {
    ++evals;
    if (!admissible(a, a0) || a0 > cfg.alpha0_max) return kInf;
    return objective(observed, std_error, a, a0, mode);
  };

  // Coarse grid: alpha uniform on [0, pi/2), alpha0 geometric in its distance to the wall.
  const std::size_t na = cfg.alpha_points, nb = cfg.alpha0_points;
  std::vector<Vertex> grid(na * nb);
  const double da = 0.5 * kPi / double(na);
  parallel_for(na * nb, [&](std::size_t idx) {
    const std::size_t i = idx / nb, j = idx % nb;
    const double a = double(i) * da;
    const double span = cfg.alpha0_max + std::cos(a);
    const double gap = 1e-3 * std::pow(span / 1e-3, double(j) / double(nb - 1));
    const double a0 = std::min(cfg.alpha0_max, -std::cos(a) + gap);
    const double value = admissible(a, a0) ? objective(observed, std_error, a, a0, mode) : kInf;
    grid[idx] = {a, a0, value};
  });
  evals += grid.size();
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return grid[x].f < grid[y].f; });
  if (!std::isfinite(grid[order[0]].f)) fail(ErrorCode::NoAdmissiblePoint, "no admissible grid point");

  Vertex best = grid[order[0]];
  res.trace.push_back({best.alpha, best.alpha0, best.f});

  const double ratio = std::pow((cfg.alpha0_max + 1.0) / 1e-3, 1.0 / double(nb - 1));
  for (std::size_t s = 0; s < std::min(cfg.starts, order.size()); ++s) {
    const Vertex start = grid[order[s]];
    if (!std::isfinite(start.f)) break;
    const double gap = start.alpha0 + std::cos(start.alpha);
    const double db = std::max(1e-4, gap * (ratio - 1.0));
    std::array<Vertex, 3> v{start, Vertex{start.alpha + da, start.alpha0, 0.0},
                            Vertex{start.alpha, start.alpha0 + db, 0.0}};
    for (std::size_t k = 1; k < 3; ++k) v[k].f = f(v[k].alpha, v[k].alpha0);
    while (true) {
      std::sort(v.begin(), v.end(), [](const Vertex& x, const Vertex& y) { return x.f < y.f; });
      if (v[0].f < best.f) best = v[0];
      res.trace.push_back({best.alpha, best.alpha0, best.f});
      const double spread = v[2].f - v[0].f;
      const double size = std::max({std::abs(v[1].alpha - v[0].alpha), std::abs(v[2].alpha - v[0].alpha),
                                    std::abs(v[1].alpha0 - v[0].alpha0), std::abs(v[2].alpha0 - v[0].alpha0)});
      if (spread < cfg.tolerance || size < 1e-13) break;
      if (evals >= cfg.max_evaluations) {
        res.budget_exhausted = true;
        break;
      }
      const double ca = 0.5 * (v[0].alpha + v[1].alpha), cb = 0.5 * (v[0].alpha0 + v[1].alpha0);
      auto along = [&](double t) {
        Vertex p{ca + t * (v[2].alpha - ca), cb + t * (v[2].alpha0 - cb), 0.0};
        p.f = f(p.alpha, p.alpha0);
        return p;
      };
      const Vertex r = along(-1.0);
      if (r.f < v[0].f) {
        const Vertex e = along(-2.0);
        v[2] = e.f < r.f ? e : r;
      } else if (r.f < v[1].f) {
        v[2] = r;
      } else {
        const Vertex c = r.f < v[2].f ? along(-0.5) : along(0.5);
        if (c.f < std::min(r.f, v[2].f)) {
          v[2] = c;
        } else {
          for (std::size_t k = 1; k < 3; ++k) {
            v[k].alpha = 0.5 * (v[0].alpha + v[k].alpha);
            v[k].alpha0 = 0.5 * (v[0].alpha0 + v[k].alpha0);
            v[k].f = f(v[k].alpha, v[k].alpha0);
          }
        }
      }
    }
    if (res.budget_exhausted) break;
  }

  res.alpha = std::abs(best.alpha);
  res.alpha0 = best.alpha0;
  res.residual = best.f;
  res.evaluations = evals;
  const double rms = std::sqrt(best.f / double(observed.values.size()));
  const bool boundary = best.alpha0 > cfg.alpha0_max - 1e-2 * (cfg.alpha0_max + 1.0);
  res.no_obstacle = boundary && rms < cfg.no_obstacle_rms;
  return res;
}

DistanceFit fit_distance_stationary(std::span<const double> omega, std::span<const double> W, double f0, double c0) {
  if (omega.size() != W.size() || omega.size() < 3) fail(ErrorCode::InvalidParams, "need at least 3 (omega, W) samples");
  if (!(f0 > 0.0) || !(c0 > 0.0)) fail(ErrorCode::InvalidParams, "f0 and c0 must be positive");
  std::vector<double> w(omega.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::abs(omega[i]);
  std::vector<double> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::max(gap, sorted[i] - sorted[i - 1]);
  const double band = sorted.back() - sorted.front();
  if (!(band > 0.0) || !(gap > 0.0)) fail(ErrorCode::BandTooNarrow, "observed band has zero width");
  const double d_min = kPi * c0 / band;
  const double d_max = kPi * c0 / (4.0 * gap);
  if (!(d_min < d_max)) fail(ErrorCode::BandTooNarrow, "band too narrow or too coarsely sampled to resolve a distance");

  DistanceFit out;
  auto cost = [&](double d) {
    ++out.evaluations;
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double r = W[i] - stationary_mirror_spectrum(d, f0, w[i], c0);
      sum += r * r;
    }
    return sum;
  };
  const std::size_t n = 4000;
  const double ratio = std::log(d_max / d_min) / double(n - 1);
  std::size_t best = 0;
  double best_cost = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cost(d_min * std::exp(ratio * double(i)));
    if (c < best_cost) {
      best_cost = c;
      best = i;
    }
  }
  out.at_boundary = best == 0 || best == n - 1;
  const double lo = d_min * std::exp(ratio * double(best == 0 ? 0 : best - 1));
  const double hi = d_min * std::exp(ratio * double(std::min(best + 1, n - 1)));
  std::uintmax_t iters = 200;
  const auto [d, c] = boost::math::tools::brent_find_minima(cost, lo, hi, std::numeric_limits<double>::digits / 2, iters);
  out.distance = c < best_cost ? d : d_min * std::exp(ratio * double(best));
  out.residual = std::min(c, best_cost);
  return out;
}

}  // namespace rindler
