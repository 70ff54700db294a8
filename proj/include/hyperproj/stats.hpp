#pragma once

// Detection statistics and their thresholds, the matched-density null, the
// per-edge likelihood factors, and the projected-edge intersection of two
// hypergraphs.

#include <cstdint>
#include <string_view>

#include "hyperproj/model.hpp"

namespace hyperproj {

enum class Statistic { EdgeCount, CliqueCount };
enum class Decision { Planted, Null };

std::string_view to_string(Statistic s);
std::string_view to_string(Decision d);

struct TestOutcome {
  Statistic statistic = Statistic::EdgeCount;
  double value = 0;
  double threshold = 0;
  Decision decision = Decision::Null;
};

// Planted iff value >= threshold.
Decision decide(double value, double threshold);
TestOutcome make_outcome(Statistic statistic, double value, double threshold);

// f(A) = |E(A)|.
std::uint64_t edge_count(const Graph& a);

enum class ThresholdRule {
  // q C(n,2) + 1/2 p s C(d,2) C(n,d)
  Paper,
  // q C(n,2) + 1/2 (p - q) 0.9 s C(d,2) C(n,d): midpoint of the finite-n mean gap
  Calibrated,
};

// Throws Overflow if the threshold is not finitely representable.
double edge_count_threshold(const ModelParams& params, ThresholdRule rule = ThresholdRule::Paper);

// g(A): number of d-vertex subsets spanning a complete subgraph of A.
std::uint64_t clique_count(const Graph& a, int d);

// q^{C(d,2)} C(n,d) + 1/2 p s C(n,d).
double clique_count_threshold(const ModelParams& params);

struct MatchedNull {
  double density = 0;
  bool clamped = false;  // raw formula left [0, 1]
};

// Erdos-Renyi density with the same expected edge count as the planted model:
//   q~ = (p - q) s C(n,d) C(d,2) / C(n,2) + q
MatchedNull matched_null_density(const ModelParams& params);

struct EdgeFactors {
  double ell_one = 1;               // p / q
  double ell_zero = 1;              // (1 - p) / (1 - q)
  double second_moment_factor = 1;  // E_Q[ell^2] = p^2/q + (1-p)^2/(1-q)
};

// Requires 0 < q <= p < 1; throws DegenerateNoise otherwise.
EdgeFactors likelihood_edge_factors(double p, double q);

// |E(P(H)) ∩ E(P(H'))|.
std::uint64_t intersection_statistic(const Hypergraph& h, const Hypergraph& h_prime);

struct IntersectionMean {
  // C(n,2) (1 - (1-s)^{C(n-2,d-2)})^2
  double exact = 0;
  // C(n,2) (C(n-2,d-2) s)^2, the first-order (union bound) version
  double approx = 0;
};

IntersectionMean expected_intersection(Vertex n, int d, double s);

}  // namespace hyperproj
