#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extropy {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request the library recognises but cannot serve, e.g. a closed form that
// does not exist for the given distribution.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: distribution specs, sample files, tables.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Observation that violates the Sample invariants.
class SampleError : public std::invalid_argument {
 public:
  enum class Reason { kEmpty, kNegative, kNonFinite };

  SampleError(Reason reason, std::size_t index, const std::string& what)
      : std::invalid_argument(what), reason_(reason), index_(index) {}

  Reason reason() const noexcept { return reason_; }
  // Position of the offending value in the raw input (0 for kEmpty).
  std::size_t index() const noexcept { return index_; }

 private:
  Reason reason_;
  std::size_t index_;
};

}  // namespace extropy
