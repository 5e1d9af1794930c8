#pragma once

#include <span>

#include "extropy/distributions.hpp"
#include "extropy/measure_kind.hpp"
#include "extropy/quadrature.hpp"

namespace extropy {

// Information measures of a catalog distribution evaluated by quadrature.
// Every integral starts at 0 as in the definitions; the cdf vanishes below the
// support and the survival function is 1 there.

// J(X) = -1/2 int f^2. Throws DomainError when f is not square-integrable.
double extropy(const BoundedDistribution& dist, const QuadratureConfig& cfg = {});
// -1/2 int_0^hi (1 - F)^2
double crj(const BoundedDistribution& dist, const QuadratureConfig& cfg = {});
// -1/2 int_0^hi x (1 - F)^2
double wcrj(const BoundedDistribution& dist, const QuadratureConfig& cfg = {});
// -1/2 int_0^hi F^2
double cpj(const BoundedDistribution& dist, const QuadratureConfig& cfg = {});
// -1/2 int_0^hi x^m F^2
double wcpj(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg = {});
// m-WCPJ integrated to `horizon` >= hi, where F = 1 beyond the support. Two
// distributions compare on equal footing only over a common horizon.
double wcpj_to_horizon(const BoundedDistribution& dist, unsigned m, double horizon,
                       const QuadratureConfig& cfg = {});
// -1/2 int_0^hi x^m F^(2n): the m-WCPJ of the maximum of n draws.
double wcpj_order_max(const BoundedDistribution& dist, unsigned n, unsigned m,
                      const QuadratureConfig& cfg = {});
// The same quantity after substituting u = F(x):
//   -1/2 int_0^1 u^(2n) Q(u)^m / f(Q(u)) du
// with Q the quantile function.
double wcpj_order_max_quantile_form(const BoundedDistribution& dist, unsigned n, unsigned m,
                                    const QuadratureConfig& cfg = {});
// -1/2 int_0^p x^m F^2 for 0 < p < 1; the support must lie in [0, 1].
double phi_p(const BoundedDistribution& dist, double p, unsigned m, const QuadratureConfig& cfg = {});

// Dispatches on `kind` to the functions above.
double quadrature_measure(const BoundedDistribution& dist, const MeasureKind& kind,
                          const QuadratureConfig& cfg = {});

// G_F(t) = int_t^hi x^m F(x) dx for t in [0, hi].
double gf_functional(const BoundedDistribution& dist, double t, unsigned m,
                     const QuadratureConfig& cfg = {});

// m-WCPJ through the representation -1/2 E[G_F(X)], i.e. the quadrature of
// f(t) G_F(t). Shares no integrand with wcpj().
double wcpj_via_gf(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg = {});

enum class TransformPairing {
  // sum_i C(m,i) a^i b^(m-i) xi^(m-i), pairing b^(m-i) with the (m-i)-th base value.
  kReversedIndex,
  // sum_i C(m,i) a^(i+1) b^(m-i) xi^i: what the substitution y = a x + b gives.
  kSubstitution,
};

// m-WCPJ of Y = aX + b from base[k] = xi^k J(X), k = 0..m. Requires a > 0,
// b >= 0 and base.size() == m + 1 (DomainError otherwise).
double wcpj_linear_transform(std::span<const double> base, double a, double b, unsigned m,
                             TransformPairing pairing = TransformPairing::kSubstitution);

// -1/2 int x^m F; a lower bound for wcpj since F^2 <= F.
double linear_cdf_lower_bound(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg = {});

struct ExtropyBoundTerms {
  double log_expectation;  // E[log(X^m F^2(X))]
  double extropy;          // J(X)
  double c_star;           // -1/2 exp(log_expectation)
  double bound;            // c_star * exp(2 J)
};

// Upper bound C* exp(2 J(X)) on the m-WCPJ. The log-expectation integrand is
// singular at the lower support endpoint and goes through
// integrate_endpoint_singular(), so a non-convergent expectation surfaces as
// QuadratureError.
ExtropyBoundTerms extropy_bound_terms(const BoundedDistribution& dist, unsigned m,
                                      const QuadratureConfig& cfg = {});
double extropy_upper_bound(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg = {});

struct EndpointBounds {
  double lower;  // b^m * CPJ
  double upper;  // -(b^(m+1) - E X^(m+1)) / (2(m+1)) * [log((b^(m+1) - E X^(m+1)) / b^(m+1)) - 1]
};

// Bounds for a distribution supported on [0, b]; DomainError if lo != 0.
EndpointBounds support_endpoint_bounds(const BoundedDistribution& dist, unsigned m,
                                       const QuadratureConfig& cfg = {});

// Upper bound a^m * CPJ for support [a, hi) with a > 0; DomainError otherwise.
double shifted_support_bound(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg = {});

// E[X^k] by quadrature of x^k f.
double moment(const BoundedDistribution& dist, unsigned k, const QuadratureConfig& cfg = {});

}  // namespace extropy
