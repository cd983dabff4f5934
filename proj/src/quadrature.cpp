#include "rindler/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rindler/error.hpp"

namespace rindler {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Piece {
  double a, b, value, error, l1;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece apply_rule(const Integrand& f, double a, double b) {
  Piece p{a, b, 0.0, 0.0, 0.0};
  p.value = Rule::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  return p;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) fail(ErrorCode::InvalidParams, "tolerances must be positive");
  if (!(half_width > 0.0)) fail(ErrorCode::InvalidParams, "truncation half-width must be positive");
  if (max_subdivisions < 1) fail(ErrorCode::InvalidParams, "max subdivisions must be at least 1");
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& q) {
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(f, b, a, q);
    return {-r.value, r.error};
  }
  std::priority_queue<Piece> heap;
  Piece first = apply_rule(f, a, b);
  double value = first.value, error = first.error, l1 = first.l1;
  heap.push(first);
  int pieces = 1;
  auto done = [&] { return error <= std::max(q.abs_tol, q.rel_tol * std::abs(value)) || error <= q.rel_tol * l1; };
  while (!done()) {
    if (pieces >= q.max_subdivisions) {
      fail(ErrorCode::NonConvergence, "subdivision budget exhausted on [" + std::to_string(a) + ", " +
                                          std::to_string(b) + "], error estimate " + std::to_string(error));
    }
    Piece worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      fail(ErrorCode::NonConvergence, "interval cannot be bisected further");
    }
    Piece left = apply_rule(f, worst.a, mid);
    Piece right = apply_rule(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++pieces;
  }
  // Re-sum from the leaves to shed the drift of the running update.
  double sum = 0.0, err = 0.0;
  std::vector<Piece> leaves;
  leaves.reserve(heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  for (const auto& p : leaves) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err};
}

QuadResult integrate_panels(const Integrand& f, double a, double b, double panel,
                            const QuadratureConfig& q) {
  if (!(panel > 0.0)) fail(ErrorCode::InvalidParams, "panel width must be positive");
  QuadResult total;
  const auto n = static_cast<long>(std::ceil((b - a) / panel));
  for (long i = 0; i < n; ++i) {
    double lo = a + static_cast<double>(i) * panel;
    double hi = (i + 1 == n) ? b : std::min(b, lo + panel);
    auto r = integrate(f, lo, hi, q);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

QuadResult integrate_pv(const Integrand& f, double a, double b, double s0,
                        const QuadratureConfig& q) {
  if (!(s0 > a && s0 < b)) fail(ErrorCode::InvalidParams, "pole must lie strictly inside the interval");
  auto folded = [&](double t) { return f(s0 + t) + f(s0 - t); };
  return integrate_pv(f, folded, a, b, s0, q);
}

QuadResult integrate_pv(const Integrand& f, const Integrand& folded, double a, double b, double s0,
                        const QuadratureConfig& q) {
  if (!(s0 > a && s0 < b)) fail(ErrorCode::InvalidParams, "pole must lie strictly inside the interval");
  const double delta = std::min(s0 - a, b - s0);
  QuadResult total = integrate(folded, 0.0, delta, q);
  if (s0 - delta > a) {
    auto r = integrate(f, a, s0 - delta, q);
    total.value += r.value;
    total.error += r.error;
  }
  if (s0 + delta < b) {
    auto r = integrate(f, s0 + delta, b, q);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

}  // namespace rindler
