#include "extropy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <ios>
#include <memory>
#include <optional>
#include <sstream>

#include "extropy/distributions.hpp"
#include "extropy/empirical.hpp"
#include "extropy/errors.hpp"
#include "extropy/measures.hpp"
#include "extropy/montecarlo.hpp"
#include "extropy/properties.hpp"

namespace extropy::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Raised for failures whose exit code is decided at the throw site.
struct CliFailure {
  int code;
  std::string message;
};

BoundedDistribution parse_dist_arg(const std::string& text) {
  try {
    return parse_distribution(text);
  } catch (const DomainError& e) {
    throw CliFailure{kParseError, e.what()};
  }
}

MeasureKind parse_kind(const std::string& kind, unsigned m, unsigned n, std::optional<double> p) {
  if (kind == "extropy") return measure::Extropy{};
  if (kind == "crj") return measure::Crj{};
  if (kind == "cpj") return measure::Cpj{};
  if (kind == "wcrj") return measure::Wcrj{};
  if (kind == "wcpj") return measure::Wcpj{m};
  if (kind == "order-max") return measure::OrderMaxWcpj{n, m};
  if (kind == "phi-p") {
    if (!p) throw CliFailure{kParseError, "--kind phi-p needs --p"};
    return measure::PhiP{*p, m};
  }
  throw CliFailure{kParseError, "unknown measure kind '" + kind + "'"};
}

// Runs `body` with its output going to `path`, or to `out` when path is empty.
void with_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open output file " + path);
  body(file);
  file.flush();
  if (!file) throw std::ios_base::failure("failed writing " + path);
}

struct Options {
  // measure
  std::string dist;
  std::string kind;
  std::string method = "quadrature";
  unsigned n_order = 1;
  std::optional<double> p;
  // shared
  unsigned m = 1;
  double alpha = 0.05;
  std::uint64_t reps = 100000;
  std::uint64_t seed = 1;
  std::vector<unsigned> n_list;
  std::string input;
  std::string table;
  std::string alt;
  std::string out_path;
};

int cmd_measure(const Options& o, std::ostream& out) {
  const auto dist = parse_dist_arg(o.dist);
  const auto kind = parse_kind(o.kind, o.m, o.n_order, o.p);
  validate(kind);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["dist"] = dist.spec();
  j["kind"] = o.kind;
  j["measure"] = to_string(kind);
  j["method"] = o.method;
  std::optional<double> closed;
  std::optional<double> quad;
  if (o.method == "closed" || o.method == "both") closed = closed_form_measure(dist, kind);
  if (o.method == "quadrature" || o.method == "both") quad = quadrature_measure(dist, kind);
  if (closed) j["closed"] = *closed;
  if (quad) j["quadrature"] = *quad;
  if (closed && quad) j["discrepancy"] = std::abs(*closed - *quad);
  j["value"] = closed ? *closed : *quad;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_measure_sample(const Options& o, std::ostream& out) {
  const Sample s = read_sample_file(o.input);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = o.input;
  j["n"] = s.size();
  j["m"] = o.m;
  j["statistic"] = empirical_wcpj(s, o.m);
  j["oracle"] = empirical_wcpj_oracle(s, o.m);
  out << j.dump(2) << '\n';
  return kOk;
}

void check_sizes(const std::vector<unsigned>& sizes) {
  if (sizes.empty()) throw CliFailure{kParseError, "--n needs at least one sample size"};
  for (unsigned n : sizes) {
    if (n < 2) throw CliFailure{kParseError, "--n sizes must be at least 2, got " + std::to_string(n)};
  }
}

int cmd_critical_values(const Options& o, std::ostream& out) {
  check_sizes(o.n_list);
  std::vector<CriticalValues> rows;
  for (unsigned n : o.n_list) {
    rows.push_back(critical_values(TestConfig{n, o.m, o.alpha, o.reps, o.seed}));
  }
  with_output(o.out_path, out, [&](std::ostream& os) { write_critical_values_csv(os, rows); });
  return kOk;
}

int cmd_test(const Options& o, std::ostream& out) {
  const Sample s = read_sample_file(o.input);
  CriticalValues cv{};
  std::string source;
  if (!o.table.empty()) {
    std::ifstream in(o.table);
    if (!in) throw std::ios_base::failure("cannot open table " + o.table);
    const auto rows = read_critical_values_csv(in);
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const CriticalValues& r) {
      return r.config.n == s.size() && r.config.m == o.m && std::abs(r.config.alpha - o.alpha) < 1e-9;
    });
    if (it == rows.end()) {
      throw CliFailure{kUnsupported, "table " + o.table + " has no row for n=" + std::to_string(s.size()) +
                                         " m=" + std::to_string(o.m)};
    }
    cv = *it;
    source = "file:" + o.table;
  } else {
    cv = critical_values(TestConfig{static_cast<unsigned>(s.size()), o.m, o.alpha, o.reps, o.seed});
    source = "generated";
  }
  const auto d = uniformity_test(s, cv);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = s.size();
  j["m"] = o.m;
  j["alpha"] = o.alpha;
  j["statistic"] = d.statistic;
  j["g1"] = cv.g1;
  j["g2"] = cv.g2;
  j["reject"] = d.reject;
  j["support_violation"] = d.support_violation;
  j["size_mismatch"] = d.size_mismatch;
  j["table_source"] = source;
  j["reps"] = cv.config.reps;
  j["seed"] = cv.config.master_seed;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_power(const Options& o, std::ostream& out) {
  check_sizes(o.n_list);
  const auto alt = parse_dist_arg(o.alt);
  if (alt.hi() > 1.0) {
    throw CliFailure{kUnsupported, "alternative " + alt.spec() + " is not supported on [0, 1]"};
  }
  std::vector<PowerRow> rows;
  for (unsigned n : o.n_list) {
    const TestConfig cfg{n, o.m, o.alpha, o.reps, o.seed};
    const auto cv = critical_values(cfg);
    rows.push_back(PowerRow{alt.spec(), cfg, power(alt, cfg, cv)});
  }
  with_output(o.out_path, out, [&](std::ostream& os) { write_power_csv(os, rows); });
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  PropertyOptions popt;
  popt.reps = o.reps;
  popt.seed = o.seed;
  std::optional<std::string> first_failure;
  verify_properties(popt, [&](const PropertyResult& r) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << r.detail << ")\n" << std::flush;
    if (!r.passed && !first_failure) first_failure = r.name;
  });
  if (first_failure) {
    err << "first failing invariant: " << *first_failure << '\n';
    return kPropertyFailure;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted cumulative past extropy: measures, estimation and a test of uniformity", "extropy"};
  app.require_subcommand(1, 1);
  Options o;

  auto* measure = app.add_subcommand("measure", "Evaluate a measure of a catalog distribution");
  measure->add_option("--dist", o.dist, "uniform:a,b | powerlaw:l | beta:a,b")->required();
  measure->add_option("--kind", o.kind, "extropy | crj | cpj | wcrj | wcpj | order-max | phi-p")->required();
  measure->add_option("--m", o.m, "Weight order");
  measure->add_option("--n", o.n_order, "Order statistic size for order-max");
  measure->add_option("--p", o.p, "Upper limit for phi-p");
  measure->add_option("--method", o.method, "closed | quadrature | both")
      ->check(CLI::IsMember({"closed", "quadrature", "both"}));

  auto* msample = app.add_subcommand("measure-sample", "Empirical m-WCPJ of a sample file");
  msample->add_option("--input", o.input, "Sample file")->required();
  msample->add_option("--m", o.m, "Weight order");

  const auto add_mc = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Weight order");
    sub->add_option("--alpha", o.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--reps", o.reps, "Monte Carlo replications")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Master seed");
  };

  auto* tables = app.add_subcommand("critical-values", "Monte Carlo critical values of the uniformity test");
  tables->add_option("--n", o.n_list, "Sample sizes, comma separated")->required()->delimiter(',');
  tables->add_option("--out", o.out_path, "Output CSV (default stdout)");
  add_mc(tables);

  auto* test = app.add_subcommand("test-uniformity", "Test a sample file against Uniform(0,1)");
  test->add_option("--input", o.input, "Sample file")->required();
  test->add_option("--table", o.table, "Critical-value CSV (default: generate)");
  add_mc(test);

  auto* pw = app.add_subcommand("power", "Power of the uniformity test against an alternative");
  pw->add_option("--alt", o.alt, "Alternative distribution supported on [0, 1]")->required();
  pw->add_option("--n", o.n_list, "Sample sizes, comma separated")->required()->delimiter(',');
  pw->add_option("--out", o.out_path, "Output CSV (default stdout)");
  add_mc(pw);

  auto* verify = app.add_subcommand("verify-properties", "Run the invariant suite");
  verify->add_option("--reps", o.reps, "Replications for Monte Carlo checks")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*measure) return cmd_measure(o, out);
    if (*msample) return cmd_measure_sample(o, out);
    if (*tables) return cmd_critical_values(o, out);
    if (*test) return cmd_test(o, out);
    if (*pw) return cmd_power(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const CliFailure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const SampleError& e) {
    err << "invalid sample: " << e.what() << '\n';
    return kParseError;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const DomainError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const QuadratureError& e) {
    err << "quadrature failed: " << e.what() << '\n';
    return kUnsupported;
  }
  return kParseError;
}

}  // namespace extropy::cli
