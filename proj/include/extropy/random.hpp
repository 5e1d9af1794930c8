#pragma once

#include <cstdint>
#include <random>

namespace extropy {

// Deterministic pseudo-random stream identified by (master_seed, index).
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Every variate transform below is implemented here rather than
// delegated to <random> distributions, whose algorithms are
// implementation-defined, so seeded runs reproduce across toolchains.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t index() const noexcept { return index_; }

  // Raw 64-bit engine output.
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform_open();

  // Standard normal via the Marsaglia polar method.
  double standard_normal();

  // Gamma(shape, 1) via Marsaglia and Tsang (2000); shape < 1 is boosted
  // through Gamma(shape + 1) * U^(1 / shape).
  double gamma(double shape);

 private:
  std::uint64_t master_seed_;
  std::uint64_t index_;
  std::mt19937_64 engine_;
};

// The stream for replication `index` under `master_seed`. Derivation is a pure
// function of its arguments, so the call order never matters.
RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t index);

namespace detail {
// SplitMix64 finaliser; used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
}  // namespace detail

}  // namespace extropy
