#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "extropy/distributions.hpp"
#include "extropy/empirical.hpp"
#include "extropy/random.hpp"

namespace extropy {

struct TestConfig {
  unsigned n = 20;
  unsigned m = 1;
  double alpha = 0.05;
  std::uint64_t reps = 100000;
  std::uint64_t master_seed = 0;

  // n >= 2, 0 < alpha < 1, reps >= 1.
  void validate() const;
};

struct CriticalValues {
  double g1;  // alpha/2 quantile of the null statistic
  double g2;  // 1 - alpha/2 quantile
  TestConfig config;
};

struct TestDecision {
  double statistic = 0.0;
  bool reject = false;
  // An observation fell outside [0, 1]; the decision is an automatic reject.
  bool support_violation = false;
  // Sample size differs from the size the critical values were built for.
  bool size_mismatch = false;
};

// Worker count: EXTROPY_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
unsigned default_worker_count();

// Replication r (0 <= r < reps) draws n values from `dist` with
// derive_stream(master_seed, first_index + r) and records empirical_wcpj.
// Output is indexed by r and independent of `workers`.
std::vector<double> simulate_statistic(const BoundedDistribution& dist, const TestConfig& cfg,
                                       std::uint64_t first_index = 0, unsigned workers = 0);

// Order statistic of rank ceil(q * R) (1-based) of `values`; q = 1 gives the
// maximum. Throws DomainError for empty input or q outside (0, 1].
double empirical_quantile(std::span<const double> values, double q);

// (G1, G2) from the null Uniform(0, 1) using stream indices [0, reps).
// Requires reps >= 1000.
CriticalValues critical_values(const TestConfig& cfg, unsigned workers = 0);

// Reject when the statistic leaves [g1, g2]. An observation outside [0, 1]
// sets support_violation and reject.
TestDecision uniformity_test(const Sample& s, const CriticalValues& cv);

// Rejection rate under `alt` over stream indices [reps, 2 reps), so the draws
// never overlap those behind the critical values. `alt` must live in [0, 1].
double power(const BoundedDistribution& alt, const TestConfig& cfg, const CriticalValues& cv,
             unsigned workers = 0);

struct PowerRow {
  std::string alt;
  TestConfig config;
  double power;
};

// CSV with header n,m,alpha,reps,seed,g1,g2 (reals to 6 decimals).
void write_critical_values_csv(std::ostream& out, std::span<const CriticalValues> rows);
// CSV with header alt,n,m,alpha,reps,seed,power (reals to 6 decimals).
void write_power_csv(std::ostream& out, std::span<const PowerRow> rows);
// Reads the critical-values CSV; throws ParseError on a malformed table.
std::vector<CriticalValues> read_critical_values_csv(std::istream& in);

}  // namespace extropy
