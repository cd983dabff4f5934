#include "rindler/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "rindler/error.hpp"
#include "rindler/freefield.hpp"

namespace rindler {

namespace {

constexpr double kPi = std::numbers::pi;

double field_kernel(const PlaneWaveEnsemble& e, double t, double x, double y, double z) {
  const std::size_t n = e.size();
  const double* kx = e.kx.data();
  const double* ky = e.ky.data();
  const double* kz = e.kz.data();
  const double* om = e.omega.data();
  const double* re = e.re.data();
  const double* im = e.im.data();
  double acc = 0.0;
  if (!e.half_space) {
#pragma omp simd reduction(+ : acc)
    for (std::size_t j = 0; j < n; ++j) {
      const double ph = kx[j] * x + ky[j] * y + kz[j] * z - om[j] * t;
      acc += re[j] * std::cos(ph) - im[j] * std::sin(ph);
    }
    return 2.0 * acc;
  }
  // a (e^{ik.x} - e^{ik.x^s}) e^{-i w t} = 2 i sin(kz z) a e^{i (kx x + ky y - w t)}.
#pragma omp simd reduction(+ : acc)
  for (std::size_t j = 0; j < n; ++j) {
    const double ph = kx[j] * x + ky[j] * y - om[j] * t;
    acc += std::sin(kz[j] * z) * (re[j] * std::sin(ph) + im[j] * std::cos(ph));
  }
  return -4.0 * acc;
}

// Proper-time samples shared by all lagged pairs, deduplicated on the half-lag lattice when possible.
struct SamplePlan {
  std::vector<double> times;
  std::vector<std::size_t> plus, minus;
};

SamplePlan make_plan(const std::vector<double>& tau, const std::vector<double>& lag) {
  SamplePlan plan;
  const std::size_t nt = tau.size(), nl = lag.size();
  plan.plus.resize(nt * nl);
  plan.minus.resize(nt * nl);
  const double step = nl > 1 ? 0.5 * (lag[1] - lag[0]) : 0.0;
  bool lattice = step > 0.0;
  std::vector<long long> tau_index(nt);
  for (std::size_t i = 0; i < nt && lattice; ++i) {
    const double u = tau[i] / step;
    tau_index[i] = std::llround(u);
    if (std::abs(u - double(tau_index[i])) > 1e-9 * std::max(1.0, std::abs(u))) lattice = false;
  }
  if (lattice) {
    long long lo = tau_index[0], hi = tau_index[0];
    for (auto ti : tau_index) {
      lo = std::min(lo, ti - static_cast<long long>(nl - 1));
      hi = std::max(hi, ti + static_cast<long long>(nl - 1));
    }
    std::vector<char> used(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t k = 0; k < nl; ++k) {
        used[static_cast<std::size_t>(tau_index[i] + static_cast<long long>(k) - lo)] = 1;
        used[static_cast<std::size_t>(tau_index[i] - static_cast<long long>(k) - lo)] = 1;
      }
    }
    std::vector<std::size_t> slot(used.size(), 0);
    for (std::size_t u = 0; u < used.size(); ++u) {
      if (!used[u]) continue;
      slot[u] = plan.times.size();
      plan.times.push_back(double(static_cast<long long>(u) + lo) * step);
    }
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t k = 0; k < nl; ++k) {
        plan.plus[i * nl + k] = slot[static_cast<std::size_t>(tau_index[i] + static_cast<long long>(k) - lo)];
        plan.minus[i * nl + k] = slot[static_cast<std::size_t>(tau_index[i] - static_cast<long long>(k) - lo)];
      }
    }
    return plan;
  }
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t k = 0; k < nl; ++k) {
      plan.plus[i * nl + k] = plan.times.size();
      plan.times.push_back(tau[i] + 0.5 * lag[k]);
      plan.minus[i * nl + k] = plan.times.size();
      plan.times.push_back(tau[i] - 0.5 * lag[k]);
    }
  }
  return plan;
}

// Welford accumulation in realization order.
struct Moments {
  std::vector<double> mean, m2;
  std::size_t count = 0;

  explicit Moments(std::size_t n) : mean(n, 0.0), m2(n, 0.0) {}

  void add(const std::vector<double>& x) {
    ++count;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d / double(count);
      m2[i] += d * (x[i] - mean[i]);
    }
  }

  std::vector<double> std_error() const {
    std::vector<double> se(mean.size(), 0.0);
    if (count < 2) return se;
    for (std::size_t i = 0; i < se.size(); ++i) se[i] = std::sqrt(m2[i] / double(count - 1) / double(count));
    return se;
  }
};

struct RunResult {
  std::vector<double> products;
  std::vector<double> wigner;
};

}  // namespace

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PlaneWaveEnsemble sample_ensemble(const SourceSpectrum& S, std::size_t n, std::uint64_t seed, bool half_space,
                                  double c0) {
  S.validate();
  if (!(S.eps > 0.0) || S.f1 > 0.0) {
    fail(ErrorCode::UnsupportedSpectrum, "plane-wave synthesis needs eps > 0 and f1 = 0");
  }
  if (n == 0) fail(ErrorCode::InvalidParams, "ensemble needs at least one wave");
  if (!(c0 > 0.0)) fail(ErrorCode::InvalidParams, "c0 must be positive");
  PlaneWaveEnsemble e;
  e.seed = seed;
  e.half_space = half_space;
  e.c0 = c0;
  for (auto* v : {&e.kx, &e.ky, &e.kz, &e.omega, &e.re, &e.im}) v->resize(n);
  // Total variance f0 / (4 pi^2 eps^2) equals 2 n E|a|^2 for the free field.
  double var = S.f0 / (8.0 * kPi * kPi * S.eps * S.eps * double(n));
  if (half_space) var *= 0.5;
  e.amplitude_variance = var;
  std::mt19937_64 gen(seed);
  boost::random::uniform_01<double> u01;
  boost::random::normal_distribution<double> normal(0.0, std::sqrt(0.5 * var));
  const double scale = 1.0 / (S.eps * c0);
  for (std::size_t j = 0; j < n; ++j) {
    const double z = 2.0 * u01(gen) - 1.0;
    const double phi = 2.0 * kPi * u01(gen);
    // Gamma(2, scale) as the sum of two exponentials.
    const double k = -scale * (std::log1p(-u01(gen)) + std::log1p(-u01(gen)));
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    e.kx[j] = k * rho * std::cos(phi);
    e.ky[j] = k * rho * std::sin(phi);
    e.kz[j] = k * z;
    e.omega[j] = c0 * k;
    e.re[j] = normal(gen);
    e.im[j] = normal(gen);
  }
  return e;
}

double field_at(const PlaneWaveEnsemble& e, const SpacetimeEvent& ev) {
  return field_kernel(e, ev.t, ev.x.x, ev.x.y, ev.x.z);
}

void field_along(const PlaneWaveEnsemble& e, std::span<const SpacetimeEvent> events, std::span<double> out) {
  if (out.size() < events.size()) fail(ErrorCode::InvalidParams, "output span too short");
  for (std::size_t i = 0; i < events.size(); ++i) out[i] = field_at(e, events[i]);
}

void EstimatorConfig::validate() const {
  if (realizations < 1) fail(ErrorCode::InvalidParams, "estimator needs at least one realization");
  if (waves < 1) fail(ErrorCode::InvalidParams, "estimator needs at least one wave");
  if (tau.empty() || lag.empty()) fail(ErrorCode::InvalidParams, "estimator grids must be non-empty");
  if (!std::is_sorted(tau.begin(), tau.end())) fail(ErrorCode::InvalidParams, "tau grid must be sorted");
  if (lag.front() != 0.0) fail(ErrorCode::InvalidParams, "lag grid must start at 0");
  if (lag.size() > 1) {
    const double h = lag[1] - lag[0];
    if (!(h > 0.0)) fail(ErrorCode::InvalidParams, "lag grid must be increasing");
    for (std::size_t k = 1; k < lag.size(); ++k) {
      if (std::abs(lag[k] - lag[k - 1] - h) > 1e-9 * h) fail(ErrorCode::InvalidParams, "lag grid must be uniform");
    }
  }
  window.validate();
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("RINDLER_PROBE_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

struct EstimateCore {
  Moments products, wigner, flat;
  std::size_t ref = 0;
  EstimateCore(std::size_t np, std::size_t nw) : products(np), wigner(nw), flat(nw) {}
};

EstimateCore run_estimator(const SourceSpectrum& S, const TrajectorySpec& spec, const EstimatorConfig& cfg,
                           std::span<const double> omega, bool half_space, double c0) {
  cfg.validate();
  validate(spec, c0);
  const std::size_t nt = cfg.tau.size(), nl = cfg.lag.size(), no = omega.size();
  const auto plan = make_plan(cfg.tau, cfg.lag);
  std::vector<SpacetimeEvent> events(plan.times.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    events[i] = evaluate(spec, plan.times[i], c0);
    if (half_space && !(events[i].x.z > 0.0)) {
      fail(ErrorCode::TrajectoryExitsDomain, "trajectory leaves z > 0 at tau = " + format_double(plan.times[i]));
    }
  }
  // Even-lag trapezoid weights times the window and the cosine.
  const double h = nl > 1 ? cfg.lag[1] - cfg.lag[0] : 0.0;
  std::vector<double> kernel(no * nl);
  for (std::size_t m = 0; m < no; ++m) {
    for (std::size_t k = 0; k < nl; ++k) {
      const double w = (k == 0 ? 1.0 : 2.0) * h * cfg.window(cfg.lag[k]);
      kernel[m * nl + k] = w * std::cos(omega[m] * cfg.lag[k]);
    }
  }
  EstimateCore core(nt * nl, nt * no);
  std::size_t ref = 0;
  for (std::size_t i = 1; i < nt; ++i) {
    if (std::abs(cfg.tau[i]) < std::abs(cfg.tau[ref])) ref = i;
  }
  core.ref = ref;

  const std::size_t block = 64;
  std::vector<RunResult> results(block);
  for (std::size_t start = 0; start < cfg.realizations; start += block) {
    const std::size_t count = std::min(block, cfg.realizations - start);
    parallel_for(count, [&](std::size_t slot) {
      const auto e = sample_ensemble(S, cfg.waves, stream_seed(cfg.seed, start + slot), half_space, c0);
      std::vector<double> u(events.size());
      field_along(e, events, u);
      auto& r = results[slot];
      r.products.assign(nt * nl, 0.0);
      r.wigner.assign(nt * no, 0.0);
      for (std::size_t p = 0; p < nt * nl; ++p) r.products[p] = u[plan.plus[p]] * u[plan.minus[p]];
      for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t m = 0; m < no; ++m) {
          double acc = 0.0;
          for (std::size_t k = 0; k < nl; ++k) acc += kernel[m * nl + k] * r.products[i * nl + k];
          r.wigner[i * no + m] = acc;
        }
      }
    });
    for (std::size_t slot = 0; slot < count; ++slot) {
      const auto& r = results[slot];
      core.products.add(r.products);
      core.wigner.add(r.wigner);
      std::vector<double> diff(nt * no);
      for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t m = 0; m < no; ++m) diff[i * no + m] = r.wigner[i * no + m] - r.wigner[ref * no + m];
      }
      core.flat.add(diff);
    }
  }
  return core;
}

AutocorrEstimate to_autocorr(const EstimateCore& core, const EstimatorConfig& cfg) {
  AutocorrEstimate out;
  out.mean = CorrelationGrid(cfg.tau, cfg.lag);
  out.mean.values = core.products.mean;
  out.std_error = CorrelationGrid(cfg.tau, cfg.lag);
  out.std_error.values = core.products.std_error();
  out.mean.meta["kind"] = "autocorrelation";
  out.std_error.meta["kind"] = "autocorrelation_stderr";
  return out;
}

}  // namespace

AutocorrEstimate estimate_autocorr(const SourceSpectrum& S, const TrajectorySpec& spec, const EstimatorConfig& cfg,
                                   bool half_space, double c0) {
  const auto core = run_estimator(S, spec, cfg, {}, half_space, c0);
  return to_autocorr(core, cfg);
}

WignerEstimate estimate_wigner(const SourceSpectrum& S, const TrajectorySpec& spec, const EstimatorConfig& cfg,
                               std::span<const double> omega, bool half_space, double c0, double length_scale) {
  if (!(length_scale > 0.0)) fail(ErrorCode::InvalidParams, "length scale must be positive");
  const auto core = run_estimator(S, spec, cfg, omega, half_space, c0);
  WignerEstimate out;
  out.autocorr = to_autocorr(core, cfg);
  std::vector<double> eta(cfg.tau.size()), nu(omega.size());
  for (std::size_t i = 0; i < eta.size(); ++i) eta[i] = c0 * cfg.tau[i] / length_scale;
  for (std::size_t j = 0; j < nu.size(); ++j) nu[j] = length_scale * omega[j] / c0;
  const std::string window = to_string(cfg.window.kind) + ":" + format_double(cfg.window.Tc);
  auto make = [&](const std::vector<double>& values, const char* kind) {
    WignerGrid g(eta, nu);
    g.values = values;
    g.meta["kind"] = kind;
    g.meta["window"] = window;
    return g;
  };
  out.mean = make(core.wigner.mean, "wigner");
  out.std_error = make(core.wigner.std_error(), "wigner_stderr");
  out.flatness = make(core.flat.mean, "wigner_flatness");
  out.flatness_stderr = make(core.flat.std_error(), "wigner_flatness_stderr");
  out.reference_row = core.ref;
  return out;
}

CovarianceCheck covariance_check(const SourceSpectrum& S, std::size_t n, std::size_t m, const SpacetimeEvent& a,
                                 const SpacetimeEvent& b, bool half_space, std::uint64_t seed, double c0,
                                 std::size_t shifts) {
  S.validate();
  if (!(S.eps > 0.0)) fail(ErrorCode::UnsupportedSpectrum, "covariance check needs eps > 0");
  if (m == 0 || shifts == 0) fail(ErrorCode::InvalidParams, "covariance check needs m > 0 and shifts > 0");
  const double range = 1e3 * S.eps;
  std::vector<double> per(m, 0.0);
  parallel_for(m, [&](std::size_t r) {
    const auto e = sample_ensemble(S, n, stream_seed(seed, r), half_space, c0);
    std::mt19937_64 gen(stream_seed(~seed, r));
    boost::random::uniform_01<double> u01;
    double acc = 0.0;
    for (std::size_t s = 0; s < shifts; ++s) {
      const double dt = range * u01(gen);
      const Vec3 dx{c0 * range * (2.0 * u01(gen) - 1.0), c0 * range * (2.0 * u01(gen) - 1.0),
                    half_space ? 0.0 : c0 * range * (2.0 * u01(gen) - 1.0)};
      const double ua = field_at(e, {a.t + dt, a.x + dx});
      const double ub = field_at(e, {b.t + dt, b.x + dx});
      acc += ua * ub;
    }
    per[r] = acc / double(shifts);
  });
  double est = 0.0;
  for (double v : per) est += v;
  est /= double(m);
  CovarianceCheck out;
  out.estimate = est;
  out.variance = S.f0 / (4.0 * kPi * kPi * S.eps * S.eps);
  out.target = regularized_covariance(S.f0, S.eps, norm(a.x - b.x), a.t - b.t, c0);
  if (half_space) {
    const Vec3 image{a.x.x, a.x.y, -a.x.z};
    out.target -= regularized_covariance(S.f0, S.eps, norm(image - b.x), a.t - b.t, c0);
  }
  out.residual = std::abs(out.estimate - out.target) / out.variance;
  return out;
}

double covariance_residual(const SourceSpectrum& S, std::size_t n, std::size_t m, const SpacetimeEvent& a,
                           const SpacetimeEvent& b, bool half_space, std::uint64_t seed, double c0) {
  return covariance_check(S, n, m, a, b, half_space, seed, c0).residual;
}

}  // namespace rindler
