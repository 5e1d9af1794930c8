#include "extropy/empirical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "extropy/errors.hpp"

namespace extropy {

Sample::Sample(std::vector<double> raw) : values_(std::move(raw)) {
  if (values_.empty()) throw SampleError(SampleError::Reason::kEmpty, 0, "sample is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v)) {
      throw SampleError(SampleError::Reason::kNonFinite, i,
                        "observation " + std::to_string(i) + " is not finite");
    }
    if (v < 0.0) {
      throw SampleError(SampleError::Reason::kNegative, i,
                        "observation " + std::to_string(i) + " is negative (" + std::to_string(v) + ")");
    }
  }
  std::sort(values_.begin(), values_.end());
}

double Sample::ecdf(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

Sample Sample::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  std::vector<double> out(values_);
  for (auto& v : out) v *= factor;
  return Sample(std::move(out));
}

Sample make_sample(std::vector<double> raw) { return Sample(std::move(raw)); }

double empirical_wcpj(const Sample& s, unsigned m) {
  const auto x = s.values();
  const std::size_t n = x.size();
  const double e = static_cast<double>(m) + 1.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  double sum = 0.0;
  double prev = std::pow(x[0], e);
  for (std::size_t i = 1; i < n; ++i) {
    const double next = std::pow(x[i], e);
    const double level = static_cast<double>(i) * inv_n;
    sum += (next - prev) * level * level;
    prev = next;
  }
  return -sum / (2.0 * e);
}

namespace {

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule with `points` nodes via Newton iteration on P_points.
GaussRule gauss_legendre(unsigned points) {
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const double pi = std::acos(-1.0);
  for (unsigned i = 0; i < points; ++i) {
    double z = std::cos(pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (unsigned k = 2; k <= points; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = points * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.nodes[i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

}  // namespace

double empirical_wcpj_oracle(const Sample& s, unsigned m) {
  const auto x = s.values();
  // (m + 2) / 2 nodes integrate x^m exactly; one spare for safety.
  const GaussRule rule = gauss_legendre(m / 2 + 2);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double lo = x[i];
    const double hi = x[i + 1];
    if (!(hi > lo)) continue;
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double level = s.ecdf(center);
    double piece = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      piece += rule.weights[k] * std::pow(center + half * rule.nodes[k], static_cast<double>(m));
    }
    total += level * level * half * piece;
  }
  return -0.5 * total;
}

Sample read_sample(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view token(line.data() + first, last - first + 1);
    if (!seen_content && token.front() == '#') {
      seen_content = true;
      continue;
    }
    seen_content = true;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(token) +
                       "' as a number");
    }
    values.push_back(v);
  }
  return Sample(std::move(values));
}

Sample read_sample_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open sample file " + path.string());
  return read_sample(in);
}

}  // namespace extropy
