#include "extropy/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "extropy/conditional.hpp"
#include "extropy/empirical.hpp"
#include "extropy/errors.hpp"
#include "extropy/measures.hpp"
#include "extropy/montecarlo.hpp"

namespace extropy {

namespace {

// Records the first violation of a property.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }

  PropertyResult result() const {
    PropertyResult r;
    r.name = name_;
    r.passed = first_failure_.empty() && cases_ > 0;
    r.detail = r.passed ? std::to_string(cases_) + " cases" : (cases_ ? first_failure_ : "no cases ran");
    return r;
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::string first_failure_;
};

std::string describe(const BoundedDistribution& d, const std::string& extra, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(12);
  os << d.spec() << ' ' << extra << ": " << lhs << " vs " << rhs;
  return os.str();
}

bool has_closed_form(const BoundedDistribution& d) {
  return !std::holds_alternative<BoundedDistribution::Beta>(d.kind());
}

std::vector<MeasureKind> closed_form_kinds(const BoundedDistribution& d) {
  std::vector<MeasureKind> kinds = {measure::Extropy{}, measure::Crj{}, measure::Cpj{}, measure::Wcrj{}};
  const auto* u = std::get_if<BoundedDistribution::Uniform>(&d.kind());
  for (unsigned m = 0; m <= 3; ++m) {
    kinds.push_back(measure::Wcpj{m});
    if (!u || u->a == 0.0) {
      for (unsigned n = 1; n <= 4; ++n) kinds.push_back(measure::OrderMaxWcpj{n, m});
    }
    if (!u || (u->a == 0.0 && u->b == 1.0)) {
      for (double p : {0.25, 0.5, 0.9}) kinds.push_back(measure::PhiP{p, m});
    }
  }
  return kinds;
}

PropertyResult quantile_cdf_identity(const std::vector<BoundedDistribution>& catalog) {
  Check c("distributions.quantile_cdf_identity");
  for (const auto& d : catalog) {
    for (int i = 0; i < 100; ++i) {
      const double x = d.lo() + (i + 0.5) / 100.0 * (d.hi() - d.lo());
      const double back = d.quantile(d.cdf(x));
      // Rounding F(x) alone moves the preimage by about eps F(x) / f(x); the
      // 1e-12 target applies wherever that is smaller.
      const double conditioning = 4.0 * std::numeric_limits<double>::epsilon() * d.cdf(x) / d.pdf(x);
      c.expect(std::abs(back - x) < std::max(1e-12, conditioning), describe(d, "x=" + std::to_string(x), back, x));
    }
  }
  return c.result();
}

PropertyResult closed_vs_quadrature(const std::vector<BoundedDistribution>& catalog) {
  Check c("distributions.closed_vs_quadrature");
  for (const auto& d : catalog) {
    if (!has_closed_form(d)) continue;
    for (const auto& k : closed_form_kinds(d)) {
      const double closed = closed_form_measure(d, k);
      const double quad = quadrature_measure(d, k);
      c.expect(std::abs(closed - quad) < 1e-8, describe(d, to_string(k), closed, quad));
    }
  }
  return c.result();
}

PropertyResult cpj_reduction(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.cpj_reduction");
  for (const auto& d : catalog) {
    const double a = wcpj(d, 0);
    const double b = cpj(d);
    c.expect(std::abs(a - b) < 1e-10, describe(d, "m=0", a, b));
  }
  return c.result();
}

PropertyResult gf_representation(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.gf_representation");
  for (const auto& d : catalog) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double direct = wcpj(d, m);
      const double via = wcpj_via_gf(d, m);
      c.expect(std::abs(direct - via) < 1e-6, describe(d, "m=" + std::to_string(m), direct, via));
    }
  }
  return c.result();
}

PropertyResult strict_negativity(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.nondegenerate_negative");
  for (const auto& d : catalog) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double v = wcpj(d, m);
      c.expect(v < 0.0, describe(d, "m=" + std::to_string(m), v, 0.0));
    }
  }
  return c.result();
}

PropertyResult linear_cdf_lower(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.linear_cdf_lower_bound");
  for (const auto& d : catalog) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double v = wcpj(d, m);
      const double bound = linear_cdf_lower_bound(d, m);
      c.expect(v >= bound, describe(d, "m=" + std::to_string(m), v, bound));
    }
  }
  return c.result();
}

PropertyResult stochastic_order() {
  Check c("measures.stochastic_order");
  const std::vector<std::pair<double, double>> bases = {{0.0, 1.0}, {0.5, 2.0}, {0.0, 0.3}, {1.0, 4.0}};
  for (const auto& [a, b] : bases) {
    for (double delta : {0.05, 0.5, 1.0, 2.5}) {
      const auto x1 = BoundedDistribution::uniform(a, b);
      const auto x2 = BoundedDistribution::uniform(a + delta, b + delta);
      bool dominated = true;
      for (int i = 0; i <= 200; ++i) {
        const double x = (b + delta) * i / 200.0;
        dominated = dominated && x1.cdf(x) >= x2.cdf(x);
      }
      c.expect(dominated, x1.spec() + " does not dominate " + x2.spec());
      const double horizon = x2.hi();
      for (unsigned m = 0; m <= 2; ++m) {
        const double v1 = wcpj_to_horizon(x1, m, horizon);
        const double v2 = wcpj_to_horizon(x2, m, horizon);
        c.expect(v1 <= v2, describe(x1, "vs " + x2.spec() + " m=" + std::to_string(m), v1, v2));
      }
    }
  }
  return c.result();
}

PropertyResult order_max_lambda(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.order_max_excess");
  for (const auto& d : catalog) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double base = wcpj(d, m);
      for (unsigned n = 1; n <= 10; ++n) {
        const double v = wcpj_order_max(d, n, m);
        c.expect(v - base >= -1e-14, describe(d, "n=" + std::to_string(n) + " m=" + std::to_string(m), v, base));
      }
    }
  }
  return c.result();
}

PropertyResult order_max_consistency(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.order_max_consistency");
  for (const auto& d : catalog) {
    if (!has_closed_form(d)) continue;
    const BoundedDistribution twin = parse_distribution(d.spec());
    for (unsigned m = 0; m <= 3; ++m) {
      for (unsigned n = 1; n <= 10; ++n) {
        const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        const double a = wcpj_order_max(d, n, m);
        const double b = wcpj_order_max(twin, n, m);
        c.expect(a == b, describe(d, tag + " twin", a, b));
        const double q = wcpj_order_max_quantile_form(d, n, m);
        c.expect(std::abs(a - q) < 1e-8, describe(d, tag + " quantile form", a, q));
      }
    }
  }
  return c.result();
}

PropertyResult extropy_bound(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.extropy_upper_bound");
  for (const auto& d : catalog) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double v = wcpj(d, m);
      const double bound = extropy_upper_bound(d, m);
      c.expect(v <= bound, describe(d, "m=" + std::to_string(m), v, bound));
    }
  }
  return c.result();
}

PropertyResult endpoint_bounds(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.support_zero_b_bounds");
  for (const auto& d : catalog) {
    if (d.lo() != 0.0) continue;
    for (unsigned m = 0; m <= 3; ++m) {
      const double v = wcpj(d, m);
      const auto b = support_endpoint_bounds(d, m);
      const std::string tag = "m=" + std::to_string(m);
      c.expect(b.lower <= v + 1e-12, describe(d, tag + " lower", b.lower, v));
      c.expect(v <= b.upper, describe(d, tag + " upper", v, b.upper));
    }
  }
  return c.result();
}

PropertyResult shifted_support(const std::vector<BoundedDistribution>& catalog) {
  Check c("measures.shifted_support_bound");
  for (const auto& d : catalog) {
    if (!(d.lo() > 0.0)) continue;
    for (unsigned m = 0; m <= 3; ++m) {
      const double v = wcpj(d, m);
      const double bound = shifted_support_bound(d, m);
      c.expect(v <= bound + 1e-12, describe(d, "m=" + std::to_string(m), v, bound));
    }
  }
  return c.result();
}

PropertyResult phi_p_characterisation() {
  Check c("measures.phi_p_characterisation");
  const auto u = BoundedDistribution::uniform(0.0, 1.0);
  const std::vector<BoundedDistribution> others = {BoundedDistribution::power_law(2.0),
                                                   BoundedDistribution::beta(1.5, 1.5),
                                                   BoundedDistribution::beta(2.0, 3.0)};
  for (unsigned m = 0; m <= 3; ++m) {
    for (int i = 1; i <= 9; ++i) {
      const double p = i / 10.0;
      const double base = phi_p(u, p, m);
      const double expected = -std::pow(p, m + 3.0) / (2.0 * (m + 3.0));
      c.expect(std::abs(base - expected) < 1e-12, describe(u, "p=" + std::to_string(p), base, expected));
      for (const auto& d : others) {
        const double v = phi_p(d, p, m);
        // Both functionals vanish as p -> 0, so separation is judged relative
        // to their size, and absolutely at p = 0.5.
        const double gap = std::abs(v - base);
        const bool separated = gap > 1e-6 * std::max(std::abs(base), std::abs(v)) && (i != 5 || gap > 1e-6);
        c.expect(separated, describe(d, "p=" + std::to_string(p), v, base));
      }
    }
  }
  return c.result();
}

PropertyResult linear_transform() {
  Check c("measures.linear_transform");
  const std::vector<std::pair<double, double>> xs = {{0.0, 1.0}, {0.5, 2.0}, {1.0, 1.5}};
  const std::vector<std::pair<double, double>> maps = {{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}, {0.5, 3.0}, {3.0, 0.25}};
  for (const auto& [lo, hi] : xs) {
    const auto x = BoundedDistribution::uniform(lo, hi);
    for (const auto& [a, b] : maps) {
      const auto y = BoundedDistribution::uniform(a * lo + b, a * hi + b);
      std::vector<double> base;
      for (unsigned m = 0; m <= 3; ++m) {
        base.push_back(wcpj(x, m));
        const double mapped = wcpj_linear_transform(base, a, b, m);
        const double direct = wcpj(y, m);
        c.expect(std::abs(mapped - direct) < 1e-9 * std::max(1.0, std::abs(direct)),
                 describe(y, "m=" + std::to_string(m), mapped, direct));
      }
    }
  }
  return c.result();
}

std::vector<Sample> random_samples(std::uint64_t seed, std::size_t count) {
  std::vector<Sample> out;
  const auto u = BoundedDistribution::uniform(0.0, 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    RandomStream s = derive_stream(seed, i);
    const std::size_t n = 2 + static_cast<std::size_t>(s.next_u64() % 49);
    out.emplace_back(u.sample(s, n));
  }
  return out;
}

PropertyResult empirical_oracle(std::uint64_t seed) {
  Check c("empirical.oracle_equivalence");
  for (const auto& s : random_samples(seed, 1000)) {
    for (unsigned m = 0; m <= 2; ++m) {
      const double sum = empirical_wcpj(s, m);
      const double oracle = empirical_wcpj_oracle(s, m);
      c.expect(std::abs(sum - oracle) < 1e-12,
               "n=" + std::to_string(s.size()) + " m=" + std::to_string(m) + ": " + std::to_string(sum));
    }
  }
  return c.result();
}

PropertyResult empirical_scale(std::uint64_t seed) {
  Check c("empirical.scale_homogeneity");
  for (const auto& s : random_samples(seed + 1, 200)) {
    for (double a : {0.5, 2.0, 7.25}) {
      for (unsigned m = 0; m <= 3; ++m) {
        const double lhs = empirical_wcpj(s.scaled(a), m);
        const double rhs = std::pow(a, m + 1.0) * empirical_wcpj(s, m);
        c.expect(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)),
                 "a=" + std::to_string(a) + " m=" + std::to_string(m));
      }
    }
  }
  return c.result();
}

PropertyResult empirical_sign(std::uint64_t seed) {
  Check c("empirical.sign");
  auto samples = random_samples(seed + 2, 200);
  samples.emplace_back(std::vector<double>{0.3});
  samples.emplace_back(std::vector<double>{0.7, 0.7, 0.7, 0.7});
  samples.emplace_back(std::vector<double>{0.0, 0.0});
  for (const auto& s : samples) {
    const bool distinct = s.min() < s.max();
    for (unsigned m = 0; m <= 3; ++m) {
      const double v = empirical_wcpj(s, m);
      const bool ok = distinct ? v < 0.0 : v == 0.0;
      c.expect(ok && v <= 0.0, "n=" + std::to_string(s.size()) + " value " + std::to_string(v));
    }
  }
  return c.result();
}

struct PartitionCase {
  BoundedDistribution dist;
  std::vector<double> coarse;
  std::vector<double> fine;
};

std::vector<PartitionCase> partition_cases() {
  return {
      {BoundedDistribution::uniform(0.0, 1.0), {0.5}, {0.25, 0.5, 0.75}},
      {BoundedDistribution::uniform(0.0, 1.0), {}, {0.3}},
      {BoundedDistribution::uniform(1.0, 3.0), {2.0}, {1.5, 2.0, 2.2}},
      {BoundedDistribution::power_law(2.0), {0.5}, {0.2, 0.5, 0.9}},
      {BoundedDistribution::power_law(3.5), {0.4, 0.8}, {0.1, 0.4, 0.6, 0.8}},
      {BoundedDistribution::beta(1.5, 1.5), {0.5}, {0.1, 0.5, 0.7}},
      {BoundedDistribution::beta(2.0, 3.0), {0.3}, {0.15, 0.3, 0.45, 0.6}},
  };
}

PropertyResult trivial_partition() {
  Check c("conditional.trivial_partition");
  for (const auto& pc : partition_cases()) {
    const auto trivial = partition_from_breakpoints(pc.dist, {});
    for (unsigned m = 0; m <= 3; ++m) {
      const double a = conditional_wcpj(pc.dist, trivial, 0, m);
      const double b = wcpj(pc.dist, m);
      c.expect(std::abs(a - b) < 1e-10, describe(pc.dist, "m=" + std::to_string(m), a, b));
      const double e = expected_conditional_wcpj(pc.dist, trivial, m);
      c.expect(std::abs(e - b) < 1e-10, describe(pc.dist, "expectation m=" + std::to_string(m), e, b));
    }
  }
  return c.result();
}

PropertyResult partition_jensen() {
  Check c("conditional.expectation_jensen");
  for (const auto& pc : partition_cases()) {
    for (const auto* breaks : {&pc.coarse, &pc.fine}) {
      if (breaks->empty()) continue;
      const auto part = partition_from_breakpoints(pc.dist, *breaks);
      for (unsigned m = 0; m <= 3; ++m) {
        const double e = expected_conditional_wcpj(pc.dist, part, m);
        const double w = wcpj(pc.dist, m);
        c.expect(e < w - 1e-10, describe(pc.dist, "m=" + std::to_string(m), e, w));
      }
    }
  }
  return c.result();
}

PropertyResult tower() {
  Check c("conditional.refinement_tower");
  for (const auto& pc : partition_cases()) {
    const auto coarse = partition_from_breakpoints(pc.dist, pc.coarse);
    const auto fine = partition_from_breakpoints(pc.dist, pc.fine);
    for (unsigned m = 0; m <= 3; ++m) {
      for (std::size_t j = 0; j < coarse.size(); ++j) {
        const double avg = tower_average(pc.dist, fine, coarse, j, m);
        const double outer = conditional_wcpj(pc.dist, coarse, j, m);
        c.expect(avg <= outer + 1e-12, describe(pc.dist, "atom " + std::to_string(j), avg, outer));
      }
      const double ef = expected_conditional_wcpj(pc.dist, fine, m);
      const double ec = expected_conditional_wcpj(pc.dist, coarse, m);
      c.expect(ef <= ec + 1e-12, describe(pc.dist, "refined expectation", ef, ec));
    }
  }
  return c.result();
}

PropertyResult conditional_extropy() {
  Check c("conditional.extropy_upper_bound");
  for (const auto& pc : partition_cases()) {
    const auto part = partition_from_breakpoints(pc.dist, pc.fine);
    for (std::size_t j = 0; j < part.size(); ++j) {
      for (unsigned m = 0; m <= 3; ++m) {
        const double v = conditional_wcpj(pc.dist, part, j, m);
        const double bound = conditional_extropy_bound(pc.dist, part, j, m);
        c.expect(v <= bound, describe(pc.dist, "atom " + std::to_string(j), v, bound));
      }
    }
  }
  return c.result();
}

PropertyResult mc_determinism(const PropertyOptions& opt) {
  Check c("montecarlo.determinism");
  TestConfig cfg{30, 1, 0.05, 5000, opt.seed};
  const auto u = BoundedDistribution::uniform(0.0, 1.0);
  const auto a = simulate_statistic(u, cfg, 0, 1);
  const auto b = simulate_statistic(u, cfg, 0, 4);
  const auto again = simulate_statistic(u, cfg, 0, opt.workers);
  c.expect(a == b, "single vs four workers differ");
  c.expect(a == again, "repeat run differs");
  const auto beta = BoundedDistribution::beta(1.5, 1.5);
  c.expect(simulate_statistic(beta, cfg, 7, 2) == simulate_statistic(beta, cfg, 7, 3), "beta streams differ");
  return c.result();
}

PropertyResult mc_tables(const PropertyOptions& opt) {
  Check c("montecarlo.critical_value_table");
  std::vector<CriticalValues> rows;
  for (unsigned n : {20U, 30U, 40U, 50U}) {
    TestConfig cfg{n, 1, 0.05, opt.reps, opt.seed};
    const auto stats = simulate_statistic(BoundedDistribution::uniform(0.0, 1.0), cfg, 0, opt.workers);
    c.expect(std::all_of(stats.begin(), stats.end(), [](double v) { return v <= 0.0; }),
             "positive statistic at n=" + std::to_string(n));
    rows.push_back(critical_values(cfg, opt.workers));
    const auto& r = rows.back();
    c.expect(r.g1 < r.g2 && r.g2 < 0.0, "ordering at n=" + std::to_string(n));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    c.expect(rows[i].g2 < rows[i - 1].g2, "g2 not decreasing at n=" + std::to_string(rows[i].config.n));
    c.expect(rows[i].g1 > rows[i - 1].g1, "g1 not increasing at n=" + std::to_string(rows[i].config.n));
  }
  return c.result();
}

PropertyResult mc_size(const PropertyOptions& opt) {
  Check c("montecarlo.size_calibration");
  const auto null_alt = BoundedDistribution::beta(1.0, 1.0);
  for (unsigned n : {40U, 50U, 100U, 150U}) {
    TestConfig cfg{n, 1, 0.05, opt.reps, opt.seed};
    const auto cv = critical_values(cfg, opt.workers);
    const double size = power(null_alt, cfg, cv, opt.workers);
    const double se = std::sqrt(cfg.alpha * (1.0 - cfg.alpha) / static_cast<double>(cfg.reps));
    c.expect(std::abs(size - cfg.alpha) <= 3.0 * se,
             "n=" + std::to_string(n) + " size " + std::to_string(size));
  }
  return c.result();
}

}  // namespace

std::vector<BoundedDistribution> property_catalog() {
  return {
      BoundedDistribution::uniform(0.0, 1.0),  BoundedDistribution::uniform(0.0, 2.0),
      BoundedDistribution::uniform(1.0, 2.0),  BoundedDistribution::uniform(0.5, 3.0),
      BoundedDistribution::uniform(0.2, 0.9),  BoundedDistribution::power_law(1.5),
      BoundedDistribution::power_law(2.0),     BoundedDistribution::power_law(3.0),
      BoundedDistribution::power_law(5.0),     BoundedDistribution::beta(1.0, 1.0),
      BoundedDistribution::beta(1.5, 1.5),     BoundedDistribution::beta(2.0, 3.0),
      BoundedDistribution::beta(3.0, 2.0),     BoundedDistribution::beta(0.8, 1.2),
      BoundedDistribution::beta(5.0, 5.0),
  };
}

std::vector<PropertyResult> verify_properties(const PropertyOptions& options,
                                              const std::function<void(const PropertyResult&)>& on_result) {
  const auto catalog = property_catalog();
  const std::vector<std::pair<std::string, std::function<PropertyResult()>>> checks = {
      {"distributions.quantile_cdf_identity", [&] { return quantile_cdf_identity(catalog); }},
      {"distributions.closed_vs_quadrature", [&] { return closed_vs_quadrature(catalog); }},
      {"measures.cpj_reduction", [&] { return cpj_reduction(catalog); }},
      {"measures.gf_representation", [&] { return gf_representation(catalog); }},
      {"measures.nondegenerate_negative", [&] { return strict_negativity(catalog); }},
      {"measures.linear_cdf_lower_bound", [&] { return linear_cdf_lower(catalog); }},
      {"measures.stochastic_order", [&] { return stochastic_order(); }},
      {"measures.order_max_excess", [&] { return order_max_lambda(catalog); }},
      {"measures.order_max_consistency", [&] { return order_max_consistency(catalog); }},
      {"measures.extropy_upper_bound", [&] { return extropy_bound(catalog); }},
      {"measures.support_zero_b_bounds", [&] { return endpoint_bounds(catalog); }},
      {"measures.shifted_support_bound", [&] { return shifted_support(catalog); }},
      {"measures.phi_p_characterisation", [&] { return phi_p_characterisation(); }},
      {"measures.linear_transform", [&] { return linear_transform(); }},
      {"empirical.oracle_equivalence", [&] { return empirical_oracle(options.seed); }},
      {"empirical.scale_homogeneity", [&] { return empirical_scale(options.seed); }},
      {"empirical.sign", [&] { return empirical_sign(options.seed); }},
      {"conditional.trivial_partition", [&] { return trivial_partition(); }},
      {"conditional.expectation_jensen", [&] { return partition_jensen(); }},
      {"conditional.refinement_tower", [&] { return tower(); }},
      {"conditional.extropy_upper_bound", [&] { return conditional_extropy(); }},
      {"montecarlo.determinism", [&] { return mc_determinism(options); }},
      {"montecarlo.critical_value_table", [&] { return mc_tables(options); }},
      {"montecarlo.size_calibration", [&] { return mc_size(options); }},
  };
  std::vector<PropertyResult> results;
  for (const auto& [name, run] : checks) {
    PropertyResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = PropertyResult{name, false, std::string("threw: ") + e.what()};
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace extropy
