#pragma once

#include <string>
#include <variant>

namespace extropy {

namespace measure {

struct Extropy {};
// Cumulative residual extropy.
struct Crj {};
// Cumulative past extropy; the m = 0 member of the weighted family.
struct Cpj {};
// Weighted cumulative residual extropy (weight x).
struct Wcrj {};
// m-weighted cumulative past extropy.
struct Wcpj {
  unsigned m = 1;
};
// m-WCPJ of the sample maximum X_{n:n}, whose cdf is F^n.
struct OrderMaxWcpj {
  unsigned n = 1;
  unsigned m = 1;
};
// Partial m-WCPJ integral over (0, p).
struct PhiP {
  double p = 0.5;
  unsigned m = 1;
};

}  // namespace measure

using MeasureKind = std::variant<measure::Extropy, measure::Crj, measure::Cpj, measure::Wcrj,
                                 measure::Wcpj, measure::OrderMaxWcpj, measure::PhiP>;

// Rejects n = 0 for OrderMaxWcpj and p outside (0, 1) for PhiP.
void validate(const MeasureKind& kind);

std::string to_string(const MeasureKind& kind);

}  // namespace extropy
