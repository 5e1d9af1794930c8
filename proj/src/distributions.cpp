#include "extropy/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <limits>
#include <sstream>

#include "extropy/errors.hpp"

namespace extropy {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(double v) { return std::isfinite(v); }

std::string format_number(double v) {
  // Shortest round-trippable form.
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_numbers(std::string_view list, std::string_view whole) {
  std::vector<double> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = list.find(',', pos);
    const auto token = trim(list.substr(pos, comma == std::string_view::npos ? list.npos : comma - pos));
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("bad number '" + std::string(token) + "' in distribution '" +
                       std::string(whole) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}


}  // namespace

void validate(const MeasureKind& kind) {
  std::visit(Overloaded{
                 [](const measure::OrderMaxWcpj& k) {
                   if (k.n < 1) throw DomainError("order statistic index n must be >= 1");
                 },
                 [](const measure::PhiP& k) {
                   if (!(k.p > 0.0 && k.p < 1.0)) throw DomainError("phi_p requires 0 < p < 1");
                 },
                 [](const auto&) {},
             },
             kind);
}

std::string to_string(const MeasureKind& kind) {
  return std::visit(
      Overloaded{
          [](const measure::Extropy&) { return std::string("extropy"); },
          [](const measure::Crj&) { return std::string("crj"); },
          [](const measure::Cpj&) { return std::string("cpj"); },
          [](const measure::Wcrj&) { return std::string("wcrj"); },
          [](const measure::Wcpj& k) { return "wcpj(m=" + std::to_string(k.m) + ")"; },
          [](const measure::OrderMaxWcpj& k) {
            return "order-max(n=" + std::to_string(k.n) + ",m=" + std::to_string(k.m) + ")";
          },
          [](const measure::PhiP& k) {
            return "phi-p(p=" + format_number(k.p) + ",m=" + std::to_string(k.m) + ")";
          },
      },
      kind);
}

BoundedDistribution BoundedDistribution::uniform(double a, double b) {
  if (!finite(a) || !finite(b) || !(a >= 0.0) || !(a < b)) {
    throw DomainError("uniform requires 0 <= a < b (finite)");
  }
  return BoundedDistribution(Uniform{a, b}, Support{a, b});
}

BoundedDistribution BoundedDistribution::power_law(double lambda) {
  if (!finite(lambda) || !(lambda > 1.0)) {
    throw DomainError("power law requires lambda > 1");
  }
  return BoundedDistribution(PowerLaw{lambda}, Support{0.0, 1.0});
}

BoundedDistribution BoundedDistribution::beta(double alpha, double beta) {
  if (!finite(alpha) || !finite(beta) || !(alpha > 0.0) || !(beta > 0.0)) {
    throw DomainError("beta requires alpha > 0 and beta > 0");
  }
  return BoundedDistribution(Beta{alpha, beta}, Support{0.0, 1.0});
}

double BoundedDistribution::cdf(double x) const {
  if (std::isnan(x)) throw DomainError("cdf argument is NaN");
  if (x <= support_.lo) return 0.0;
  if (x >= support_.hi) return 1.0;
  return std::visit(Overloaded{
                        [x](const Uniform& u) { return (x - u.a) / (u.b - u.a); },
                        [x](const PowerLaw& p) { return std::pow(x, p.lambda); },
                        [x](const Beta& b) { return boost::math::ibeta(b.alpha, b.beta, x); },
                    },
                    kind_);
}

double BoundedDistribution::pdf(double x) const {
  if (std::isnan(x)) throw DomainError("pdf argument is NaN");
  if (x < support_.lo || x > support_.hi) return 0.0;
  return std::visit(
      Overloaded{
          [](const Uniform& u) { return 1.0 / (u.b - u.a); },
          [x](const PowerLaw& p) { return p.lambda * std::pow(x, p.lambda - 1.0); },
          [x](const Beta& b) {
            if (x == 0.0 || x == 1.0) {
              const double shape = x == 0.0 ? b.alpha : b.beta;
              const double other = x == 0.0 ? b.beta : b.alpha;
              if (shape < 1.0) return std::numeric_limits<double>::infinity();
              if (shape > 1.0) return 0.0;
              return other;  // Beta(1, k) at 0 (or Beta(k, 1) at 1) has density k.
            }
            return boost::math::ibeta_derivative(b.alpha, b.beta, x);
          },
      },
      kind_);
}

namespace {

// ibeta_inv's Newton step can stall (Boost 1.74 fails at the median of
// Beta(5,5)); bracketed root finding on ibeta takes over then.
double beta_quantile(double a, double b, double u) {
  try {
    return boost::math::ibeta_inv(a, b, u);
  } catch (const boost::math::evaluation_error&) {
    const auto f = [&](double x) { return boost::math::ibeta(a, b, x) - u; };
    std::uintmax_t iters = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, 1.0, -u, 1.0 - u,
                                                            boost::math::tools::eps_tolerance<double>(), iters);
    return 0.5 * (lo + hi);
  }
}

}  // namespace

double BoundedDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("quantile requires 0 <= u <= 1");
  if (u == 0.0) return support_.lo;
  if (u == 1.0) return support_.hi;
  return std::visit(Overloaded{
                        [u](const Uniform& d) { return d.a + u * (d.b - d.a); },
                        [u](const PowerLaw& p) { return std::pow(u, 1.0 / p.lambda); },
                        [u](const Beta& b) { return beta_quantile(b.alpha, b.beta, u); },
                    },
                    kind_);
}

double BoundedDistribution::draw(RandomStream& stream) const {
  return std::visit(Overloaded{
                        [&](const Uniform& d) { return d.a + stream.uniform_open() * (d.b - d.a); },
                        [&](const PowerLaw& p) { return std::pow(stream.uniform_open(), 1.0 / p.lambda); },
                        [&](const Beta& b) {
                          const double x = stream.gamma(b.alpha);
                          const double y = stream.gamma(b.beta);
                          return x / (x + y);
                        },
                    },
                    kind_);
}

std::vector<double> BoundedDistribution::sample(RandomStream& stream, std::size_t count) const {
  std::vector<double> out(count);
  for (auto& v : out) v = draw(stream);
  return out;
}

std::string BoundedDistribution::spec() const {
  return std::visit(
      Overloaded{
          [](const Uniform& d) { return "uniform:" + format_number(d.a) + "," + format_number(d.b); },
          [](const PowerLaw& p) { return "powerlaw:" + format_number(p.lambda); },
          [](const Beta& b) { return "beta:" + format_number(b.alpha) + "," + format_number(b.beta); },
      },
      kind_);
}

BoundedDistribution parse_distribution(std::string_view text) {
  const auto body = trim(text);
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("distribution '" + std::string(text) +
                     "' must look like uniform:a,b | powerlaw:l | beta:a,b");
  }
  std::string family(trim(body.substr(0, colon)));
  std::transform(family.begin(), family.end(), family.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto params = parse_numbers(body.substr(colon + 1), text);
  const auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParseError("distribution '" + std::string(text) + "' expects " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  if (family == "uniform") {
    expect(2);
    return BoundedDistribution::uniform(params[0], params[1]);
  }
  if (family == "powerlaw" || family == "power-law") {
    expect(1);
    return BoundedDistribution::power_law(params[0]);
  }
  if (family == "beta") {
    expect(2);
    return BoundedDistribution::beta(params[0], params[1]);
  }
  throw ParseError("unknown distribution family '" + family + "'");
}

namespace {

double uniform_closed_form(const BoundedDistribution::Uniform& d, const MeasureKind& kind) {
  const double a = d.a;
  const double b = d.b;
  const double w = b - a;
  return std::visit(
      Overloaded{
          [&](const measure::Extropy&) { return -1.0 / (2.0 * w); },
          // The residual measures integrate from 0, where the survival function
          // is 1 on [0, a); the -a/2 and -a^2/4 terms vanish for a = 0.
          [&](const measure::Crj&) { return -a / 2.0 - w / 6.0; },
          [&](const measure::Cpj&) { return -w / 6.0; },
          [&](const measure::Wcrj&) { return -a * a / 4.0 + (a - b) * (3.0 * a + b) / 24.0; },
          [&](const measure::Wcpj& k) {
            const double m = k.m;
            const double bm1 = std::pow(b, m + 1.0);
            const double num = bm1 * w * w * m * m + bm1 * w * (3.0 * b - 5.0 * a) * m +
                               2.0 * bm1 * (b * b - 3.0 * a * b + 3.0 * a * a) -
                               2.0 * std::pow(a, m + 3.0);
            return -num / (2.0 * w * w * (m + 1.0) * (m + 2.0) * (m + 3.0));
          },
          [&](const measure::OrderMaxWcpj& k) {
            if (a != 0.0) throw UnsupportedError("order-max closed form needs a uniform on [0, b]");
            const double m = k.m;
            return -std::pow(b, m + 1.0) / (2.0 * (2.0 * k.n + m + 1.0));
          },
          [&](const measure::PhiP& k) {
            if (a != 0.0 || b != 1.0) throw UnsupportedError("phi_p closed form needs Uniform(0,1)");
            const double m = k.m;
            return -std::pow(k.p, m + 3.0) / (2.0 * (m + 3.0));
          },
      },
      kind);
}

double power_law_closed_form(double lambda, const MeasureKind& kind) {
  const double l = lambda;
  return std::visit(
      Overloaded{
          [&](const measure::Extropy&) { return -l * l / (2.0 * (2.0 * l - 1.0)); },
          [&](const measure::Crj&) { return -l * l / ((l + 1.0) * (2.0 * l + 1.0)); },
          [&](const measure::Cpj&) { return -1.0 / (2.0 * (2.0 * l + 1.0)); },
          [&](const measure::Wcrj&) { return -l * l / (4.0 * (l + 1.0) * (l + 2.0)); },
          [&](const measure::Wcpj& k) { return -1.0 / (4.0 * l + 2.0 * k.m + 2.0); },
          [&](const measure::OrderMaxWcpj& k) {
            return -1.0 / (2.0 * (2.0 * k.n * l + k.m + 1.0));
          },
          [&](const measure::PhiP& k) {
            const double e = 2.0 * l + k.m + 1.0;
            return -std::pow(k.p, e) / (2.0 * e);
          },
      },
      kind);
}

}  // namespace

double closed_form_measure(const BoundedDistribution& dist, const MeasureKind& kind) {
  validate(kind);
  return std::visit(Overloaded{
                        [&](const BoundedDistribution::Uniform& d) { return uniform_closed_form(d, kind); },
                        [&](const BoundedDistribution::PowerLaw& p) {
                          return power_law_closed_form(p.lambda, kind);
                        },
                        [&](const BoundedDistribution::Beta&) -> double {
                          throw UnsupportedError("no closed form for " + to_string(kind) + " of " +
                                                 dist.spec());
                        },
                    },
                    dist.kind());
}

}  // namespace extropy
