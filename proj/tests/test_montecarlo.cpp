#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rindler/freefield.hpp"
#include "rindler/montecarlo.hpp"

using namespace rindler;

TEST_CASE("stream seeds are distinct and reproducible") {
  CHECK(stream_seed(1, 0) != stream_seed(1, 1));
  CHECK(stream_seed(1, 5) == stream_seed(1, 5));
  CHECK(stream_seed(1, 5) != stream_seed(2, 5));
}

TEST_CASE("ensembles are deterministic in the seed") {
  SourceSpectrum S{1.0, 0.0, 0.1};
  const auto a = sample_ensemble(S, 64, 42, false, 1.0);
  const auto b = sample_ensemble(S, 64, 42, false, 1.0);
  const auto c = sample_ensemble(S, 64, 43, false, 1.0);
  CHECK(a.kx == b.kx);
  CHECK(a.re == b.re);
  CHECK(a.kx != c.kx);
  const SpacetimeEvent ev{0.3, {0.1, -0.2, 0.5}};
  CHECK(field_at(a, ev) == field_at(b, ev));
}

TEST_CASE("dispersion relation and half-space node") {
  SourceSpectrum S{1.0, 0.0, 0.1};
  const auto e = sample_ensemble(S, 128, 9, true, 1.0);
  for (std::size_t j = 0; j < e.size(); ++j) {
    const double k = std::sqrt(e.kx[j] * e.kx[j] + e.ky[j] * e.ky[j] + e.kz[j] * e.kz[j]);
    CHECK(k == doctest::Approx(std::abs(e.omega[j])).epsilon(1e-12));
  }
  CHECK(std::abs(field_at(e, {0.4, {0.3, 0.2, 0.0}})) < 1e-10);
}

TEST_CASE("two-point covariance matches the regularized kernel") {
  SourceSpectrum S{1.0, 0.0, 0.2};
  const SpacetimeEvent a{0.0, {0.0, 0.0, 0.0}}, b{0.1, {0.2, 0.0, 0.0}};
  const auto c = covariance_check(S, 512, 64, a, b, false, 11, 1.0, 64);
  CHECK(c.residual < 0.05);
}

TEST_CASE("small estimator run is reproducible across worker counts") {
  SourceSpectrum S{1.0, 0.0, 0.2};
  EstimatorConfig cfg;
  cfg.realizations = 8;
  cfg.waves = 128;
  cfg.tau = {0.0};
  cfg.lag = {0.0, 0.5, 1.0};
  cfg.seed = 3;
  const auto a = estimate_autocorr(S, traj::Rindler{1.0}, cfg, false, 1.0);
  const auto b = estimate_autocorr(S, traj::Rindler{1.0}, cfg, false, 1.0);
  CHECK(a.mean.values == b.mean.values);
  CHECK(a.std_error.values[0] > 0.0);
}
