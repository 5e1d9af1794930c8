#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "extropy/distributions.hpp"
#include "extropy/quadrature.hpp"

namespace extropy {

// Finite partition of a distribution's support into consecutive atoms; the
// sigma-field it generates is the conditioning information. Atoms are
// left-closed/right-open except the last, which is closed.
class Partition {
 public:
  struct Atom {
    double lo;
    double hi;
    double prob;
  };

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::span<const double> breakpoints() const noexcept { return breaks_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  const Atom& atom(std::size_t index) const;

  // Index of the atom containing x (x clamped to the support).
  std::size_t locate(double x) const;

 private:
  friend Partition partition_from_breakpoints(const BoundedDistribution&, std::vector<double>);
  std::vector<double> breaks_;
  std::vector<Atom> atoms_;
};

// Atoms are delimited by the support ends and `breaks`, which must be strictly
// increasing and strictly inside the support (DomainError otherwise). An empty
// list gives the trivial partition. Atoms with probability below 1e-12 are
// rejected.
Partition partition_from_breakpoints(const BoundedDistribution& dist, std::vector<double> breaks);

// P(X <= x | X in atom).
double conditional_cdf(const BoundedDistribution& dist, const Partition& part, std::size_t atom_index,
                       double x);

// -1/2 int_0^hi x^m F(x | atom)^2 dx over the whole support; above the atom
// the conditional cdf is 1 and that plateau contributes.
double conditional_wcpj(const BoundedDistribution& dist, const Partition& part, std::size_t atom_index,
                        unsigned m, const QuadratureConfig& cfg = {});

// sum_j P(atom_j) * conditional_wcpj(j).
double expected_conditional_wcpj(const BoundedDistribution& dist, const Partition& part, unsigned m,
                                 const QuadratureConfig& cfg = {});

// Average of the fine partition's conditional m-WCPJ over the fine atoms
// inside coarse atom `coarse_index`, weighted by P(fine | coarse). `fine` must
// refine `coarse` (every coarse breakpoint is a fine breakpoint), else
// DomainError.
double tower_average(const BoundedDistribution& dist, const Partition& fine, const Partition& coarse,
                     std::size_t coarse_index, unsigned m, const QuadratureConfig& cfg = {});

// Per-atom analogue of the extropy bound: B* exp(2 J(X | atom)) with
// B* = -1/2 exp(E[log(X^m F(X | atom)^2) | atom]), using the truncated density.
double conditional_extropy_bound(const BoundedDistribution& dist, const Partition& part,
                                 std::size_t atom_index, unsigned m, const QuadratureConfig& cfg = {});

}  // namespace extropy
