#include "hyperproj/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "hyperproj/clique.hpp"
#include "hyperproj/combinatorics.hpp"
#include "hyperproj/error.hpp"

namespace hyperproj {

namespace {

// Product coef * C(n, d) computed in the log domain when C(n, d) is not an
// exact integer. Zero coefficients give zero.
double scaled_binomial(double log_coef, bool coef_is_zero, Vertex n, int d) {
  if (coef_is_zero) return 0.0;
  double value;
  if (auto exact = binomial_exact(n, static_cast<std::uint64_t>(d))) {
    value = std::exp(log_coef) * static_cast<double>(*exact);
  } else {
    value = std::exp(log_coef + log_binomial(n, d));
  }
  if (!std::isfinite(value)) throw Overflow("threshold term is not finitely representable");
  return value;
}

double pairs_within(int d) { return d * (d - 1) / 2.0; }

}  // namespace

std::string_view to_string(Statistic s) {
  return s == Statistic::EdgeCount ? "edge-count" : "clique-count";
}

std::string_view to_string(Decision d) { return d == Decision::Planted ? "planted" : "null"; }

Decision decide(double value, double threshold) {
  return value >= threshold ? Decision::Planted : Decision::Null;
}

TestOutcome make_outcome(Statistic statistic, double value, double threshold) {
  return {statistic, value, threshold, decide(value, threshold)};
}

std::uint64_t edge_count(const Graph& a) { return a.edge_count(); }

double edge_count_threshold(const ModelParams& params, ThresholdRule rule) {
  const double null_mean = params.q() * static_cast<double>(pair_count(params.n()));
  const double weight = rule == ThresholdRule::Paper ? 0.5 * params.p()
                                                     : 0.5 * 0.9 * (params.p() - params.q());
  const double excess = scaled_binomial(
      std::log(weight) + std::log(params.s()) + std::log(pairs_within(params.d())),
      weight <= 0.0 || params.s() <= 0.0, params.n(), params.d());
  const double t = null_mean + excess;
  if (!std::isfinite(t)) throw Overflow("edge-count threshold overflow");
  return t;
}

std::uint64_t clique_count(const Graph& a, int d) { return count_cliques(a, d); }

double clique_count_threshold(const ModelParams& params) {
  const double q = params.q();
  const double background =
      scaled_binomial(pairs_within(params.d()) * std::log(q), q <= 0.0, params.n(), params.d());
  const double planted = scaled_binomial(std::log(0.5 * params.p()) + std::log(params.s()),
                                         params.p() <= 0.0 || params.s() <= 0.0, params.n(),
                                         params.d());
  return background + planted;
}

MatchedNull matched_null_density(const ModelParams& params) {
  const double excess =
      scaled_binomial(std::log(params.p() - params.q()) + std::log(params.s()) +
                          std::log(pairs_within(params.d())),
                      params.p() <= params.q() || params.s() <= 0.0, params.n(), params.d()) /
      static_cast<double>(pair_count(params.n()));
  const double raw = excess + params.q();
  if (raw > 1.0) return {1.0, true};
  if (raw < 0.0) return {0.0, true};
  return {raw, false};
}

EdgeFactors likelihood_edge_factors(double p, double q) {
  if (!(q > 0.0 && p < 1.0 && q <= p))
    throw DegenerateNoise("likelihood factors need 0 < q <= p < 1");
  EdgeFactors f;
  f.ell_one = p / q;
  f.ell_zero = (1.0 - p) / (1.0 - q);
  f.second_moment_factor = p * p / q + (1.0 - p) * (1.0 - p) / (1.0 - q);
  return f;
}

std::uint64_t intersection_statistic(const Hypergraph& h, const Hypergraph& h_prime) {
  if (h.n() != h_prime.n()) throw InvalidParams("hypergraphs on different vertex sets");
  const auto a = project(h);
  const auto b = project(h_prime);
  std::uint64_t shared = 0;
  auto i = a.edges().begin();
  auto j = b.edges().begin();
  while (i != a.edges().end() && j != b.edges().end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

IntersectionMean expected_intersection(Vertex n, int d, double s) {
  if (d < 2 || n < static_cast<Vertex>(d)) throw InvalidParams("need n >= d >= 2");
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidParams("s must lie in [0, 1]");
  const double pairs = static_cast<double>(pair_count(n));
  const double through_pair = binomial_real(n - 2, static_cast<std::uint64_t>(d - 2));
  // P(a given pair is covered) = 1 - (1 - s)^{C(n-2, d-2)}
  const double covered = s >= 1.0 ? 1.0 : -std::expm1(through_pair * std::log1p(-s));
  IntersectionMean m;
  m.exact = pairs * covered * covered;
  m.approx = pairs * (through_pair * s) * (through_pair * s);
  return m;
}

}  // namespace hyperproj
