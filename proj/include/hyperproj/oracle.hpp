#pragma once

// Exact ground truth at tiny scale. Hypergraphs and graphs are encoded as
// bit masks over the lexicographic orderings of the d-subsets and of the
// vertex pairs of [n], and every distribution is obtained by enumerating all
// masks. Both universes are capped at 20 elements (2^20 states per side).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperproj/model.hpp"

namespace hyperproj {

inline constexpr unsigned kOracleMaxUniverse = 20;

// Finite distribution with a sorted, duplicate-free support of encodings.
struct ExactDistribution {
  std::vector<std::uint64_t> support;
  std::vector<double> probs;

  double prob(std::uint64_t encoding) const;
  double total() const;
};

// Canonical encodings for a fixed (n, d).
class OracleSpace {
 public:
  // Throws BudgetExceeded when C(n,d) or C(n,2) exceeds 20.
  OracleSpace(Vertex n, int d);

  Vertex n() const { return n_; }
  int d() const { return d_; }
  unsigned subset_count() const { return static_cast<unsigned>(subsets_.size()); }
  unsigned pair_total() const { return pairs_; }

  std::uint64_t encode(const Hypergraph& h) const;
  std::uint64_t encode(const Graph& g) const;
  Hypergraph decode_hypergraph(std::uint64_t mask) const;
  Graph decode_graph(std::uint64_t mask) const;

  // Pair mask of P(H) for hypergraph mask h.
  std::uint64_t projection(std::uint64_t h) const;

 private:
  Vertex n_;
  int d_;
  unsigned pairs_;
  std::vector<Hyperedge> subsets_;
  std::vector<std::uint64_t> subset_pairs_;  // pair mask of each d-subset
};

// P(A) = sum_H mu(H) P(A | H). Zero-probability graphs are dropped.
ExactDistribution exact_planted_marginal(const ModelParams& params);

// Q(A): Erdos-Renyi(q) over all graphs on [n], zero-probability graphs dropped.
ExactDistribution exact_null(Vertex n, double q);

// L(A) = P(A)/Q(A) as E_H[prod over P(H) of ell(A_ij)]. Needs 0 < q < 1.
double exact_likelihood_ratio(const Graph& a, const ModelParams& params);

// TV(P, Q) = 1/2 sum_A |P(A) - Q(A)|.
double exact_tv(const ModelParams& params);

// The same distance as 1/2 E_Q|L - 1|. Needs 0 < q < 1.
double exact_tv_via_likelihood(const ModelParams& params);

struct SecondMoment {
  double direct = 0;   // sum_A P(A)^2 / Q(A)
  double replica = 0;  // E_{H,H'} (p^2/q + (1-p)^2/(1-q))^{|E(P(H)) ∩ E(P(H'))|}
};

// Needs 0 < q < 1 and p < 1.
SecondMoment exact_second_moment(const ModelParams& params);

class Posterior {
 public:
  const ExactDistribution& distribution() const { return dist_; }
  // P(A), the normalizing constant.
  double evidence() const { return evidence_; }
  // Mask of a posterior draw.
  std::uint64_t sample(std::uint64_t seed) const;
  // Most probable mask; ties go to the smallest encoding.
  std::uint64_t map_estimate() const;

 private:
  friend Posterior exact_posterior(const Graph&, const ModelParams&);
  ExactDistribution dist_;
  std::vector<double> cdf_;
  double evidence_ = 0;
};

// mu_A(H) ∝ mu(H) P(A | H). Throws ZeroEvidence when P(A) = 0.
Posterior exact_posterior(const Graph& a, const ModelParams& params);

struct OverlapDistribution {
  std::map<std::uint64_t, std::uint64_t> histogram;  // |H ∩ H'| -> trials
  std::vector<std::uint64_t> samples;                // per-trial overlap, in trial order
  double mean_truth_size = 0;                        // average |H| over trials
};

// Per trial: (H, A) from the planted model, H' from the exact posterior given
// A, record |H ∩ H'|.
OverlapDistribution exact_overlap_distribution(const ModelParams& params, std::uint64_t seed,
                                               std::uint64_t trials);

// Golden-file form: {"params": {...}, "support_encoding": [...], "probs": [...]}.
std::string oracle_fixture_json(const ModelParams& params, const ExactDistribution& dist);
ExactDistribution parse_oracle_fixture(const std::string& json_text);

}  // namespace hyperproj
