#pragma once

#include <functional>
#include <span>

namespace extropy {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  // Maximum number of bisections applied to any one subinterval.
  int max_depth = 50;

  // Throws DomainError unless rel_tol > 0, abs_tol > 0 and max_depth >= 10.
  void validate() const;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 15-point Gauss-Kronrod quadrature on [lo, hi]. Nodes are
// interior, so integrable endpoint singularities are never evaluated. Stops
// once the summed error estimate is within max(abs_tol, rel_tol * |value|);
// throws QuadratureError if a subinterval needing refinement is already at
// max_depth or the integrand returns a non-finite value.
double integrate(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg = {});

// integrate() over consecutive pieces [points[i], points[i+1]]; use at known
// kinks of the integrand.
double integrate_piecewise(const Integrand& f, std::span<const double> points,
                           const QuadratureConfig& cfg = {});

// Integral over (lo, hi] of a function with an integrable singularity at lo.
// The integral is taken over [lo + eps, hi] on geometrically graded pieces,
// starting from eps = 1e-12; if halving eps moves the result by 1e-8 or more,
// eps is reduced by 1e-3 and the check repeated. Throws QuadratureError when no
// offset down to 1e-60 is stable, which signals divergence.
double integrate_endpoint_singular(const Integrand& f, double lo, double hi,
                                   const QuadratureConfig& cfg = {});

}  // namespace extropy
