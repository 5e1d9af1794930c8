#include "extropy/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "extropy/errors.hpp"

namespace extropy {

namespace {

constexpr double kMinAtomProb = 1e-12;

double ipow(double x, unsigned k) {
  double r = 1.0;
  while (k) {
    if (k & 1U) r *= x;
    x *= x;
    k >>= 1U;
  }
  return r;
}

}  // namespace

const Partition::Atom& Partition::atom(std::size_t index) const {
  if (index >= atoms_.size()) {
    throw DomainError("atom index " + std::to_string(index) + " out of range (partition has " +
                      std::to_string(atoms_.size()) + " atoms)");
  }
  return atoms_[index];
}

std::size_t Partition::locate(double x) const {
  const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  return static_cast<std::size_t>(it - breaks_.begin());
}

Partition partition_from_breakpoints(const BoundedDistribution& dist, std::vector<double> breaks) {
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const double b = breaks[i];
    if (!(b > dist.lo() && b < dist.hi())) {
      throw DomainError("breakpoint " + std::to_string(b) + " is not interior to the support of " +
                        dist.spec());
    }
    if (i > 0 && !(b > breaks[i - 1])) throw DomainError("breakpoints must be strictly increasing");
  }
  Partition part;
  part.breaks_ = std::move(breaks);
  double lo = dist.lo();
  double sum = 0.0;
  for (std::size_t i = 0; i <= part.breaks_.size(); ++i) {
    const double hi = i < part.breaks_.size() ? part.breaks_[i] : dist.hi();
    const double prob = dist.cdf(hi) - dist.cdf(lo);
    if (prob < kMinAtomProb) {
      throw DomainError("atom [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] has probability below 1e-12");
    }
    part.atoms_.push_back({lo, hi, prob});
    sum += prob;
    lo = hi;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw DomainError("atom probabilities do not sum to 1");
  return part;
}

double conditional_cdf(const BoundedDistribution& dist, const Partition& part, std::size_t atom_index,
                       double x) {
  const auto& a = part.atom(atom_index);
  if (x < a.lo) return 0.0;
  if (x >= a.hi) return 1.0;
  return std::clamp((dist.cdf(x) - dist.cdf(a.lo)) / a.prob, 0.0, 1.0);
}

double conditional_wcpj(const BoundedDistribution& dist, const Partition& part, std::size_t atom_index,
                        unsigned m, const QuadratureConfig& cfg) {
  const auto& a = part.atom(atom_index);
  const auto integrand = [&](double x) {
    const double F = conditional_cdf(dist, part, atom_index, x);
    return ipow(x, m) * F * F;
  };
  const double points[] = {a.lo, a.hi, dist.hi()};
  return -0.5 * integrate_piecewise(integrand, points, cfg);
}

double expected_conditional_wcpj(const BoundedDistribution& dist, const Partition& part, unsigned m,
                                 const QuadratureConfig& cfg) {
  double total = 0.0;
  for (std::size_t j = 0; j < part.size(); ++j) {
    total += part.atom(j).prob * conditional_wcpj(dist, part, j, m, cfg);
  }
  return total;
}

double tower_average(const BoundedDistribution& dist, const Partition& fine, const Partition& coarse,
                     std::size_t coarse_index, unsigned m, const QuadratureConfig& cfg) {
  const auto fb = fine.breakpoints();
  for (double b : coarse.breakpoints()) {
    if (!std::binary_search(fb.begin(), fb.end(), b)) {
      throw DomainError("fine partition does not refine the coarse one (missing break " +
                        std::to_string(b) + ")");
    }
  }
  const auto& outer = coarse.atom(coarse_index);
  double total = 0.0;
  for (std::size_t j = 0; j < fine.size(); ++j) {
    const auto& a = fine.atom(j);
    if (a.lo >= outer.lo && a.hi <= outer.hi) {
      total += a.prob / outer.prob * conditional_wcpj(dist, fine, j, m, cfg);
    }
  }
  return total;
}

double conditional_extropy_bound(const BoundedDistribution& dist, const Partition& part,
                                 std::size_t atom_index, unsigned m, const QuadratureConfig& cfg) {
  const auto& a = part.atom(atom_index);
  if (const auto* b = std::get_if<BoundedDistribution::Beta>(&dist.kind())) {
    if ((b->alpha <= 0.5 && a.lo == 0.0) || (b->beta <= 0.5 && a.hi == 1.0)) {
      throw DomainError("conditional extropy diverges for " + dist.spec());
    }
  }
  const double base = dist.cdf(a.lo);
  const auto integrand = [&](double x) {
    const double f = dist.pdf(x) / a.prob;
    if (f == 0.0) return 0.0;
    const double F = std::clamp((dist.cdf(x) - base) / a.prob, 0.0, 1.0);
    const double log_x = m == 0 ? 0.0 : static_cast<double>(m) * std::log(x);
    return f * (log_x + 2.0 * std::log(F));
  };
  const double log_expectation = integrate_endpoint_singular(integrand, a.lo, a.hi, cfg);
  const auto density_sq = [&](double x) {
    const double f = dist.pdf(x) / a.prob;
    return f * f;
  };
  const double j_cond = -0.5 * integrate(density_sq, a.lo, a.hi, cfg);
  return -0.5 * std::exp(log_expectation) * std::exp(2.0 * j_cond);
}

}  // namespace extropy
