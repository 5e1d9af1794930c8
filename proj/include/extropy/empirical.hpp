#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

namespace extropy {

// Validated, ascending sequence of non-negative finite observations.
class Sample {
 public:
  // Throws SampleError on empty input, a negative value or a non-finite value.
  explicit Sample(std::vector<double> raw);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

  // Right-continuous empirical cdf: #{values <= x} / n.
  double ecdf(double x) const;

  // Copy with every observation multiplied by `factor` > 0.
  Sample scaled(double factor) const;

 private:
  std::vector<double> values_;
};

Sample make_sample(std::vector<double> raw);

// Plug-in estimator
//   -1/(2(m+1)) * sum_{i=1}^{n-1} (X_{i+1:n}^(m+1) - X_{i:n}^(m+1)) (i/n)^2.
double empirical_wcpj(const Sample& s, unsigned m);

// The same quantity evaluated as -1/2 int x^m F_n(x)^2 dx: F_n is looked up
// by counting on each gap between distinct observations and x^m is integrated
// by Gauss-Legendre rules that are exact for the polynomial degree.
double empirical_wcpj_oracle(const Sample& s, unsigned m);

// One observation per line; blank lines are skipped and the first non-blank
// line may be a header starting with '#'. Throws ParseError with the line
// number on malformed input and SampleError if validation fails.
Sample read_sample(std::istream& in);
Sample read_sample_file(const std::filesystem::path& path);

}  // namespace extropy
