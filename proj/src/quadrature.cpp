#include "extropy/quadrature.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "extropy/errors.hpp"

namespace extropy {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate(const Integrand& f, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const auto eval = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw QuadratureError("integrand is not finite at x = " + std::to_string(x));
    }
    return y;
  };
  const double fc = eval(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = eval(center - dx) + eval(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return Segment{lo, hi, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_depth < 10) {
    throw DomainError("quadrature config needs rel_tol > 0, abs_tol > 0, max_depth >= 10");
  }
}

double integrate(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg) {
  cfg.validate();
  if (std::isnan(lo) || std::isnan(hi) || !(lo <= hi)) {
    throw DomainError("integrate requires lo <= hi");
  }
  if (lo == hi) return 0.0;

  std::priority_queue<Segment> heap;
  Segment first = evaluate(f, lo, hi, 0);
  double value = first.value;
  double error = first.error;
  heap.push(first);

  // Error estimates below this are roundoff; bisecting further cannot help.
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    Segment worst = heap.top();
    if (worst.error <= kRoundoff * std::abs(worst.value)) break;
    if (worst.depth >= cfg.max_depth) {
      throw QuadratureError("quadrature exceeded max_depth " + std::to_string(cfg.max_depth) +
                            " near [" + std::to_string(worst.lo) + ", " + std::to_string(worst.hi) +
                            "]");
    }
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = evaluate(f, worst.lo, mid, worst.depth + 1);
    const Segment right = evaluate(f, mid, worst.hi, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    heap.pop();
  }
  return value;
}

double integrate_piecewise(const Integrand& f, std::span<const double> points,
                           const QuadratureConfig& cfg) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    total += integrate(f, points[i], points[i + 1], cfg);
  }
  return total;
}

namespace {

double integrate_graded(const Integrand& f, double lo, double hi, double offset, const QuadratureConfig& cfg) {
  std::vector<double> points;
  for (double step = offset; step < hi - lo; step *= 10.0) points.push_back(lo + step);
  if (points.empty() || points.back() < hi) points.push_back(hi);
  return integrate_piecewise(f, points, cfg);
}

}  // namespace

double integrate_endpoint_singular(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg) {
  constexpr double kStability = 1e-8;
  if (!(lo < hi)) throw DomainError("integrate_endpoint_singular requires lo < hi");
  for (double offset = 1e-12; offset >= 1e-60; offset *= 1e-3) {
    const double coarse = integrate_graded(f, lo, hi, offset, cfg);
    const double fine = integrate_graded(f, lo, hi, 0.5 * offset, cfg);
    if (std::abs(coarse - fine) < kStability) return fine;
  }
  throw QuadratureError("endpoint-singular integral did not stabilise; it may diverge");
}

}  // namespace extropy
