#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extropy/measure_kind.hpp"
#include "extropy/random.hpp"

namespace extropy {

struct Support {
  double lo;
  double hi;
};

// A non-negative distribution with bounded support drawn from a closed
// catalog: Uniform(a, b), the power law f(x) = lambda x^(lambda - 1) on [0, 1],
// and Beta(alpha, beta). Values are immutable once constructed.
class BoundedDistribution {
 public:
  struct Uniform {
    double a;
    double b;
  };
  struct PowerLaw {
    double lambda;
  };
  struct Beta {
    double alpha;
    double beta;
  };
  using Kind = std::variant<Uniform, PowerLaw, Beta>;

  // Requires 0 <= a < b.
  static BoundedDistribution uniform(double a, double b);
  // Requires lambda > 1.
  static BoundedDistribution power_law(double lambda);
  // Requires alpha > 0 and beta > 0.
  static BoundedDistribution beta(double alpha, double beta);

  const Kind& kind() const noexcept { return kind_; }
  Support support() const noexcept { return support_; }
  double lo() const noexcept { return support_.lo; }
  double hi() const noexcept { return support_.hi; }

  double cdf(double x) const;
  double pdf(double x) const;
  // Generalised inverse inf{x : cdf(x) >= u}; throws DomainError for u
  // outside [0, 1].
  double quantile(double u) const;

  // Draws `count` values, consuming only `stream`.
  std::vector<double> sample(RandomStream& stream, std::size_t count) const;
  double draw(RandomStream& stream) const;

  // Canonical text form accepted by parse_distribution, e.g. "beta:1.5,1.5".
  std::string spec() const;

 private:
  BoundedDistribution(Kind kind, Support support) : kind_(kind), support_(support) {}

  Kind kind_;
  Support support_;
};

// Parses `uniform:a,b`, `powerlaw:l` or `beta:a,b`. Malformed text raises
// ParseError; well-formed text with invalid parameters raises DomainError.
BoundedDistribution parse_distribution(std::string_view text);

// Exact closed-form value of `kind` for uniform and power-law members of the
// catalog. Throws UnsupportedError when no closed form is available.
double closed_form_measure(const BoundedDistribution& dist, const MeasureKind& kind);

}  // namespace extropy
