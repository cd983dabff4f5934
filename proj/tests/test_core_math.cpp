#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rindler/core_math.hpp"
#include "rindler/error.hpp"

using namespace rindler;

namespace {

struct PsiRef {
  double v, a, b, c, value;
};

// mpmath, 50 digits (tests/oracles/psi_mpmath.py).
constexpr PsiRef kPsiRefs[] = {
    {0.7, 0.5, 0.3, -1.2, -2.9361253843436457},
    {1.3, 0.2, -0.4, -1.0, -1.3813016209553142},
    {0.0, 0.5, 0.3, -1.2, -2.1531419601822285},
    {2.5, 0.0, 0.8, -1.5, -0.18637608162460131},
    {0.4, 0.0, -0.6, -1.1, -1.9715266073088209},
    {1.1, 0.0, 0.5, -2.0, -2.4886998169323767},
    {0.9, 0.9, 0.0, -3.0, -1.2486196434578496},
    {0.3, 0.3, -1.5, -2.0, -1.224536382132077},
};

}  // namespace

TEST_CASE("elementary kernels near the origin") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(x_over_sinh(0.0) == 1.0);
  CHECK(x_over_sinh(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sinc(1e-5) == doctest::Approx(1.0 - 1e-10 / 6.0).epsilon(1e-15));
  CHECK(argcosh(1.0) == 0.0);
  CHECK(argcosh(std::cosh(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("closed form matches the high-precision reference") {
  for (const auto& r : kPsiRefs) {
    CAPTURE(r.v);
    CAPTURE(r.a);
    CAPTURE(r.b);
    const auto v = psi_closed(r.v, {r.a, r.b, r.c});
    CHECK_FALSE(v.delta);
    CHECK(std::abs(v.value - r.value) <= 1e-10 * std::max(1.0, std::abs(r.value)));
  }
}

TEST_CASE("closed form is even in v") {
  const PsiParams p{0.4, -0.3, -1.3};
  CHECK(psi_closed(1.7, p).value == doctest::Approx(psi_closed(-1.7, p).value).epsilon(1e-14));
}

TEST_CASE("quadrature agrees with the closed form") {
  for (const auto& r : kPsiRefs) {
    const auto q = psi_quadrature(r.v, {r.a, r.b, r.c});
    CHECK(std::abs(q.real - r.value) <= 1e-7 * std::max(1.0, std::abs(r.value)));
    CHECK(std::abs(q.imag) < 1e-9);
  }
}

TEST_CASE("branches and the delta case") {
  CHECK(psi_closed(0.5, {0.0, 0.5, -1.2}).branch == PsiCase::Linear);
  CHECK(psi_closed(0.5, {0.5, 0.0, -1.2}).branch == PsiCase::Quadratic);
  CHECK(psi_closed(0.5, {0.5, 0.3, -1.2}).branch == PsiCase::General);
  const auto d = psi_closed(0.5, {0.0, 0.0, -2.0});
  CHECK(d.delta);
  CHECK(d.branch == PsiCase::Delta);
  CHECK(d.value == 0.0);
}

TEST_CASE("invalid coefficients are rejected") {
  CHECK_THROWS_AS(psi_closed(0.5, {-0.1, 0.0, -1.0}), Error);
  CHECK_THROWS_AS(psi_closed(0.5, {0.0, 0.0, 0.0}), Error);
}

TEST_CASE("Helmholtz-Kirchhoff residual is small on a large sphere") {
  const double r = hk_residual(2.0, {0.3, -0.2, 0.1}, {0.3, -0.2, 1.1}, 200.0, 20000, 1.0, 7);
  CHECK(r < 1e-3);
  CHECK(std::abs(green_hom(2.0, {0, 0, 0}, {0, 0, 1}, 1.0)) ==
        doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-14));
}
