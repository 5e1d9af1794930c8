#include "extropy/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "extropy/errors.hpp"

namespace extropy {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
T parse_field(std::string_view token, std::size_t line_no, const char* column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("table line " + std::to_string(line_no) + ": bad " + column + " '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

void TestConfig::validate() const {
  if (n < 2) throw DomainError("test config needs n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("test config needs 0 < alpha < 1");
  if (reps < 1) throw DomainError("test config needs reps >= 1");
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("EXTROPY_THREADS")) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<double> simulate_statistic(const BoundedDistribution& dist, const TestConfig& cfg,
                                       std::uint64_t first_index, unsigned workers) {
  cfg.validate();
  std::vector<double> out(cfg.reps);
  const auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) {
      RandomStream stream = derive_stream(cfg.master_seed, first_index + r);
      out[r] = empirical_wcpj(Sample(dist.sample(stream, cfg.n)), cfg.m);
    }
  };
  if (workers == 0) workers = default_worker_count();
  const std::uint64_t count = std::min<std::uint64_t>(workers, cfg.reps);
  if (count <= 1) {
    run(0, cfg.reps);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (std::uint64_t w = 0; w < count; ++w) {
    pool.emplace_back(run, cfg.reps * w / count, cfg.reps * (w + 1) / count);
  }
  for (auto& t : pool) t.join();
  return out;
}

double empirical_quantile(std::span<const double> values, double q) {
  if (values.empty()) throw DomainError("empirical quantile of an empty sequence");
  if (!(q > 0.0 && q <= 1.0)) throw DomainError("empirical quantile needs 0 < q <= 1");
  const auto size = static_cast<double>(values.size());
  const double target = q * size;
  // Products such as 0.025 * 1e5 may land a few ulps off an integer rank.
  const double nearest = std::round(target);
  const double rank = std::abs(target - nearest) <= 1e-9 * std::max(1.0, target) ? nearest : std::ceil(target);
  const auto index = static_cast<std::size_t>(std::clamp(rank, 1.0, size)) - 1;
  std::vector<double> copy(values.begin(), values.end());
  std::nth_element(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(index), copy.end());
  return copy[index];
}

CriticalValues critical_values(const TestConfig& cfg, unsigned workers) {
  cfg.validate();
  if (cfg.reps < 1000) throw DomainError("critical values need reps >= 1000");
  const auto stats = simulate_statistic(BoundedDistribution::uniform(0.0, 1.0), cfg, 0, workers);
  return CriticalValues{empirical_quantile(stats, cfg.alpha / 2.0),
                        empirical_quantile(stats, 1.0 - cfg.alpha / 2.0), cfg};
}

TestDecision uniformity_test(const Sample& s, const CriticalValues& cv) {
  TestDecision d;
  d.statistic = empirical_wcpj(s, cv.config.m);
  d.size_mismatch = s.size() != cv.config.n;
  d.support_violation = s.max() > 1.0;
  d.reject = d.support_violation || d.statistic < cv.g1 || d.statistic > cv.g2;
  return d;
}

double power(const BoundedDistribution& alt, const TestConfig& cfg, const CriticalValues& cv,
             unsigned workers) {
  if (alt.hi() > 1.0) throw DomainError("power alternative must be supported on [0, 1], got " + alt.spec());
  const auto stats = simulate_statistic(alt, cfg, cfg.reps, workers);
  const auto rejected = std::count_if(stats.begin(), stats.end(),
                                      [&](double v) { return v < cv.g1 || v > cv.g2; });
  return static_cast<double>(rejected) / static_cast<double>(stats.size());
}

void write_critical_values_csv(std::ostream& out, std::span<const CriticalValues> rows) {
  out << "n,m,alpha,reps,seed,g1,g2\n";
  for (const auto& r : rows) {
    out << r.config.n << ',' << r.config.m << ',' << fixed6(r.config.alpha) << ',' << r.config.reps << ','
        << r.config.master_seed << ',' << fixed6(r.g1) << ',' << fixed6(r.g2) << '\n';
  }
}

void write_power_csv(std::ostream& out, std::span<const PowerRow> rows) {
  out << "alt,n,m,alpha,reps,seed,power\n";
  for (const auto& r : rows) {
    out << csv_field(r.alt) << ',' << r.config.n << ',' << r.config.m << ',' << fixed6(r.config.alpha)
        << ',' << r.config.reps << ',' << r.config.master_seed << ',' << fixed6(r.power) << '\n';
  }
}

std::vector<CriticalValues> read_critical_values_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  const auto strip = [](std::string& s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  };
  if (!std::getline(in, line)) throw ParseError("critical-value table is empty");
  ++line_no;
  strip(line);
  if (line != "n,m,alpha,reps,seed,g1,g2") {
    throw ParseError("critical-value table header must be n,m,alpha,reps,seed,g1,g2");
  }
  std::vector<CriticalValues> rows;
  while (std::getline(in, line)) {
    ++line_no;
    strip(line);
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      cols.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (cols.size() != 7) {
      throw ParseError("table line " + std::to_string(line_no) + ": expected 7 columns");
    }
    CriticalValues cv{};
    cv.config.n = parse_field<unsigned>(cols[0], line_no, "n");
    cv.config.m = parse_field<unsigned>(cols[1], line_no, "m");
    cv.config.alpha = parse_field<double>(cols[2], line_no, "alpha");
    cv.config.reps = parse_field<std::uint64_t>(cols[3], line_no, "reps");
    cv.config.master_seed = parse_field<std::uint64_t>(cols[4], line_no, "seed");
    cv.g1 = parse_field<double>(cols[5], line_no, "g1");
    cv.g2 = parse_field<double>(cols[6], line_no, "g2");
    if (!(cv.g1 < cv.g2)) throw ParseError("table line " + std::to_string(line_no) + ": needs g1 < g2");
    rows.push_back(cv);
  }
  return rows;
}

}  // namespace extropy
