#include "extropy/measures.hpp"

#include <cmath>
#include <vector>

#include "extropy/errors.hpp"

namespace extropy {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double ipow(double x, unsigned k) {
  double r = 1.0;
  while (k) {
    if (k & 1U) r *= x;
    x *= x;
    k >>= 1U;
  }
  return r;
}

double log_expectation(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg) {
  const auto integrand = [&](double x) {
    const double f = dist.pdf(x);
    if (f == 0.0) return 0.0;
    // log(x^m F^2); log1p keeps precision where F is close to 1.
    const double F = dist.cdf(x);
    const double log_F = F > 0.5 ? std::log1p(F - 1.0) : std::log(F);
    const double log_x = m == 0 ? 0.0 : static_cast<double>(m) * std::log(x);
    return f * (log_x + 2.0 * log_F);
  };
  return integrate_endpoint_singular(integrand, dist.lo(), dist.hi(), cfg);
}

}  // namespace

double extropy(const BoundedDistribution& dist, const QuadratureConfig& cfg) {
  if (const auto* b = std::get_if<BoundedDistribution::Beta>(&dist.kind())) {
    if (b->alpha <= 0.5 || b->beta <= 0.5) {
      throw DomainError("extropy diverges for " + dist.spec() + " (density not square-integrable)");
    }
  }
  const auto integrand = [&](double x) {
    const double f = dist.pdf(x);
    return f * f;
  };
  return -0.5 * integrate(integrand, dist.lo(), dist.hi(), cfg);
}

double crj(const BoundedDistribution& dist, const QuadratureConfig& cfg) {
  const auto integrand = [&](double x) {
    const double s = 1.0 - dist.cdf(x);
    return s * s;
  };
  const std::vector<double> points = {0.0, dist.lo(), dist.hi()};
  return -0.5 * integrate_piecewise(integrand, points, cfg);
}

double wcrj(const BoundedDistribution& dist, const QuadratureConfig& cfg) {
  const auto integrand = [&](double x) {
    const double s = 1.0 - dist.cdf(x);
    return x * s * s;
  };
  const std::vector<double> points = {0.0, dist.lo(), dist.hi()};
  return -0.5 * integrate_piecewise(integrand, points, cfg);
}

double cpj(const BoundedDistribution& dist, const QuadratureConfig& cfg) {
  const auto integrand = [&](double x) {
    const double F = dist.cdf(x);
    return F * F;
  };
  return -0.5 * integrate(integrand, dist.lo(), dist.hi(), cfg);
}

double wcpj(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg) {
  return wcpj_order_max(dist, 1, m, cfg);
}

double wcpj_order_max(const BoundedDistribution& dist, unsigned n, unsigned m,
                      const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("order statistic index n must be >= 1");
  const unsigned power = 2 * n;
  const auto integrand = [&](double x) { return ipow(x, m) * ipow(dist.cdf(x), power); };
  return -0.5 * integrate(integrand, dist.lo(), dist.hi(), cfg);
}

double wcpj_to_horizon(const BoundedDistribution& dist, unsigned m, double horizon,
                       const QuadratureConfig& cfg) {
  if (!(horizon >= dist.hi())) throw DomainError("horizon must be at least sup B");
  const double e = static_cast<double>(m) + 1.0;
  const double plateau = (ipow(horizon, m + 1) - ipow(dist.hi(), m + 1)) / e;
  return wcpj(dist, m, cfg) - 0.5 * plateau;
}

double wcpj_order_max_quantile_form(const BoundedDistribution& dist, unsigned n, unsigned m,
                                    const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("order statistic index n must be >= 1");
  const auto integrand = [&](double u) {
    const double x = dist.quantile(u);
    return ipow(u, 2 * n) * ipow(x, m) / dist.pdf(x);
  };
  return -0.5 * integrate(integrand, 0.0, 1.0, cfg);
}

double phi_p(const BoundedDistribution& dist, double p, unsigned m, const QuadratureConfig& cfg) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("phi_p requires 0 < p < 1");
  if (dist.hi() > 1.0) throw DomainError("phi_p requires support within [0, 1], got " + dist.spec());
  if (p <= dist.lo()) return 0.0;
  const auto integrand = [&](double x) {
    const double F = dist.cdf(x);
    return ipow(x, m) * F * F;
  };
  std::vector<double> points = {dist.lo(), std::min(p, dist.hi())};
  if (p > dist.hi()) points.push_back(p);
  return -0.5 * integrate_piecewise(integrand, points, cfg);
}

double quadrature_measure(const BoundedDistribution& dist, const MeasureKind& kind,
                          const QuadratureConfig& cfg) {
  validate(kind);
  return std::visit(Overloaded{
                        [&](const measure::Extropy&) { return extropy(dist, cfg); },
                        [&](const measure::Crj&) { return crj(dist, cfg); },
                        [&](const measure::Cpj&) { return cpj(dist, cfg); },
                        [&](const measure::Wcrj&) { return wcrj(dist, cfg); },
                        [&](const measure::Wcpj& k) { return wcpj(dist, k.m, cfg); },
                        [&](const measure::OrderMaxWcpj& k) { return wcpj_order_max(dist, k.n, k.m, cfg); },
                        [&](const measure::PhiP& k) { return phi_p(dist, k.p, k.m, cfg); },
                    },
                    kind);
}

double gf_functional(const BoundedDistribution& dist, double t, unsigned m, const QuadratureConfig& cfg) {
  if (!(t >= 0.0 && t <= dist.hi())) {
    throw DomainError("G_F requires t in [0, sup B]");
  }
  const auto integrand = [&](double x) { return ipow(x, m) * dist.cdf(x); };
  return integrate(integrand, std::max(t, dist.lo()), dist.hi(), cfg);
}

double wcpj_via_gf(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg) {
  QuadratureConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol * 1e-2;
  const auto integrand = [&](double t) {
    const double f = dist.pdf(t);
    return f == 0.0 ? 0.0 : f * gf_functional(dist, t, m, inner);
  };
  return -0.5 * integrate(integrand, dist.lo(), dist.hi(), cfg);
}

double wcpj_linear_transform(std::span<const double> base, double a, double b, unsigned m,
                             TransformPairing pairing) {
  if (base.size() != static_cast<std::size_t>(m) + 1) {
    throw DomainError("linear transform needs m + 1 base values, got " + std::to_string(base.size()));
  }
  if (!(a > 0.0) || !(b >= 0.0)) throw DomainError("linear transform requires a > 0 and b >= 0");
  double total = 0.0;
  double binom = 1.0;  // C(m, i)
  for (unsigned i = 0; i <= m; ++i) {
    const double bpow = ipow(b, m - i);
    total += pairing == TransformPairing::kReversedIndex ? binom * ipow(a, i) * bpow * base[m - i]
                                                   : binom * ipow(a, i + 1) * bpow * base[i];
    binom = binom * (m - i) / (i + 1);
  }
  return total;
}

double linear_cdf_lower_bound(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg) {
  const auto integrand = [&](double x) { return ipow(x, m) * dist.cdf(x); };
  return -0.5 * integrate(integrand, dist.lo(), dist.hi(), cfg);
}

double moment(const BoundedDistribution& dist, unsigned k, const QuadratureConfig& cfg) {
  const auto integrand = [&](double x) { return ipow(x, k) * dist.pdf(x); };
  return integrate(integrand, dist.lo(), dist.hi(), cfg);
}

ExtropyBoundTerms extropy_bound_terms(const BoundedDistribution& dist, unsigned m,
                                      const QuadratureConfig& cfg) {
  ExtropyBoundTerms t{};
  t.log_expectation = log_expectation(dist, m, cfg);
  t.extropy = extropy(dist, cfg);
  t.c_star = -0.5 * std::exp(t.log_expectation);
  t.bound = t.c_star * std::exp(2.0 * t.extropy);
  return t;
}

double extropy_upper_bound(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg) {
  return extropy_bound_terms(dist, m, cfg).bound;
}

EndpointBounds support_endpoint_bounds(const BoundedDistribution& dist, unsigned m,
                                       const QuadratureConfig& cfg) {
  if (dist.lo() != 0.0) throw DomainError("support endpoint bounds need support [0, b], got " + dist.spec());
  const double b = dist.hi();
  const double bm1 = ipow(b, m + 1);
  const double gap = bm1 - moment(dist, m + 1, cfg);
  EndpointBounds out{};
  out.lower = ipow(b, m) * cpj(dist, cfg);
  out.upper = -gap / (2.0 * (m + 1)) * (std::log(gap / bm1) - 1.0);
  return out;
}

double shifted_support_bound(const BoundedDistribution& dist, unsigned m, const QuadratureConfig& cfg) {
  if (!(dist.lo() > 0.0)) throw DomainError("support must start at a > 0, got " + dist.spec());
  return ipow(dist.lo(), m) * cpj(dist, cfg);
}

}  // namespace extropy
