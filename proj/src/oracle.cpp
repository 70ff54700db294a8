#include "hyperproj/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <unordered_map>

#include "hyperproj/combinatorics.hpp"
#include "hyperproj/error.hpp"
#include "hyperproj/rng.hpp"

namespace hyperproj {

namespace {

using Mask = std::uint64_t;

unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

// x^k for k = 0..max, with 0^0 = 1.
std::vector<double> power_table(double x, unsigned max) {
  std::vector<double> t(max + 1);
  for (unsigned k = 0; k <= max; ++k) t[k] = std::pow(x, static_cast<double>(k));
  return t;
}

// Channel P(A | P(H) = m) for every (A, m) through popcounts.
class Channel {
 public:
  Channel(unsigned pairs, double p, double q)
      : pairs_(pairs),
        p_(power_table(p, pairs)),
        not_p_(power_table(1.0 - p, pairs)),
        q_(power_table(q, pairs)),
        not_q_(power_table(1.0 - q, pairs)) {}

  double operator()(Mask a, Mask m) const {
    const unsigned in_proj = popcount(m);
    const unsigned on = popcount(a);
    const unsigned kept = popcount(a & m);
    return p_[kept] * not_p_[in_proj - kept] * q_[on - kept] * not_q_[pairs_ - in_proj - on + kept];
  }

 private:
  unsigned pairs_;
  std::vector<double> p_, not_p_, q_, not_q_;
};

struct ProjectionClass {
  Mask mask;
  double weight;  // mu{H : P(H) = mask}
};

// Enumeration shared by the marginal, likelihood and second-moment routes.
struct Enumeration {
  OracleSpace space;
  std::vector<double> prior_by_size;  // mu(H) for |H| = k
  std::vector<Mask> projection_of;    // indexed by hypergraph mask
  std::vector<ProjectionClass> classes;

  explicit Enumeration(const ModelParams& params) : space(params.n(), params.d()) {
    const unsigned subsets = space.subset_count();
    const double s = params.s();
    prior_by_size.resize(subsets + 1);
    for (unsigned k = 0; k <= subsets; ++k)
      prior_by_size[k] = std::pow(s, k) * std::pow(1.0 - s, subsets - k);

    const Mask states = Mask{1} << subsets;
    projection_of.resize(states);
    for (Mask h = 1; h < states; ++h)
      projection_of[h] = projection_of[h & (h - 1)] | space.projection(Mask{1} << std::countr_zero(h));

    std::vector<double> by_mask(Mask{1} << space.pair_total(), 0.0);
    for (Mask h = 0; h < states; ++h) by_mask[projection_of[h]] += prior_by_size[popcount(h)];
    for (Mask m = 0; m < by_mask.size(); ++m)
      if (by_mask[m] > 0.0) classes.push_back({m, by_mask[m]});
  }

  Mask graph_states() const { return Mask{1} << space.pair_total(); }

  double null_prob(Mask a, double q) const {
    const unsigned on = popcount(a);
    return std::pow(q, on) * std::pow(1.0 - q, space.pair_total() - on);
  }

  double marginal(Mask a, const Channel& channel) const {
    double total = 0;
    for (const auto& c : classes) total += c.weight * channel(a, c.mask);
    return total;
  }
};

void require_interior_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DegenerateNoise("likelihood ratio needs 0 < q < 1");
}

// With p = q or s = 0 the observation carries no trace of H.
bool uninformative(const ModelParams& params) { return params.p() == params.q() || params.s() == 0.0; }

}  // namespace

double ExactDistribution::prob(std::uint64_t encoding) const {
  const auto it = std::lower_bound(support.begin(), support.end(), encoding);
  if (it == support.end() || *it != encoding) return 0.0;
  return probs[static_cast<std::size_t>(it - support.begin())];
}

double ExactDistribution::total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

OracleSpace::OracleSpace(Vertex n, int d) : n_(n), d_(d) {
  if (d < 2 || d > kMaxArity || n < static_cast<Vertex>(d))
    throw InvalidParams("oracle needs 2 <= d <= 6 and n >= d");
  const auto subsets = binomial_exact(n, static_cast<std::uint64_t>(d));
  if (!subsets || *subsets > kOracleMaxUniverse || pair_count(n) > kOracleMaxUniverse)
    throw BudgetExceeded("exact enumeration limited to C(n,d) <= 20 and C(n,2) <= 20");
  pairs_ = static_cast<unsigned>(pair_count(n));

  Hyperedge cur;
  cur.size = static_cast<std::uint8_t>(d);
  for (int i = 0; i < d; ++i) cur.v[i] = static_cast<Vertex>(i + 1);
  while (true) {
    subsets_.push_back(cur);
    Mask pm = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) pm |= Mask{1} << pair_rank(n, cur.v[a], cur.v[b]);
    subset_pairs_.push_back(pm);
    int i = d - 1;
    while (i >= 0 && cur.v[i] == n - static_cast<Vertex>(d - 1 - i)) --i;
    if (i < 0) break;
    ++cur.v[i];
    for (int k = i + 1; k < d; ++k) cur.v[k] = cur.v[k - 1] + 1;
  }
}

std::uint64_t OracleSpace::encode(const Hypergraph& h) const {
  if (h.n() != n_ || h.d() != d_) throw InvalidParams("hypergraph does not match oracle space");
  Mask m = 0;
  for (const auto& e : h.edges()) {
    const auto it = std::lower_bound(subsets_.begin(), subsets_.end(), e);
    m |= Mask{1} << (it - subsets_.begin());
  }
  return m;
}

std::uint64_t OracleSpace::encode(const Graph& g) const {
  if (g.n() != n_) throw InvalidParams("graph does not match oracle space");
  Mask m = 0;
  for (const auto& e : g.edges()) m |= Mask{1} << pair_rank(n_, e.u, e.v);
  return m;
}

Hypergraph OracleSpace::decode_hypergraph(std::uint64_t mask) const {
  std::vector<Hyperedge> edges;
  for (unsigned i = 0; i < subsets_.size(); ++i)
    if (mask >> i & 1) edges.push_back(subsets_[i]);
  return Hypergraph::from_sorted(n_, d_, std::move(edges));
}

Graph OracleSpace::decode_graph(std::uint64_t mask) const {
  std::vector<Edge> edges;
  unsigned k = 0;
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex j = i + 1; j <= n_; ++j, ++k)
      if (mask >> k & 1) edges.push_back({i, j});
  return Graph::from_sorted(n_, std::move(edges));
}

std::uint64_t OracleSpace::projection(std::uint64_t h) const {
  Mask m = 0;
  for (unsigned i = 0; i < subsets_.size(); ++i)
    if (h >> i & 1) m |= subset_pairs_[i];
  return m;
}

ExactDistribution exact_planted_marginal(const ModelParams& params) {
  const Enumeration en(params);
  if (uninformative(params)) return exact_null(params.n(), params.q());
  const Channel channel(en.space.pair_total(), params.p(), params.q());
  ExactDistribution out;
  for (Mask a = 0; a < en.graph_states(); ++a) {
    const double pa = en.marginal(a, channel);
    if (pa > 0.0) {
      out.support.push_back(a);
      out.probs.push_back(pa);
    }
  }
  return out;
}

ExactDistribution exact_null(Vertex n, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidParams("q must lie in [0, 1]");
  if (pair_count(n) > kOracleMaxUniverse) throw BudgetExceeded("C(n,2) above the enumeration cap");
  const auto pairs = static_cast<unsigned>(pair_count(n));
  const auto on = power_table(q, pairs);
  const auto off = power_table(1.0 - q, pairs);
  ExactDistribution out;
  for (Mask a = 0; a < (Mask{1} << pairs); ++a) {
    const unsigned k = popcount(a);
    const double pr = on[k] * off[pairs - k];
    if (pr > 0.0) {
      out.support.push_back(a);
      out.probs.push_back(pr);
    }
  }
  return out;
}

double exact_likelihood_ratio(const Graph& a, const ModelParams& params) {
  require_interior_q(params.q());
  const Enumeration en(params);
  const Mask am = en.space.encode(a);
  const double ell_one = params.p() / params.q();
  const double ell_zero = (1.0 - params.p()) / (1.0 - params.q());
  const auto ones = power_table(ell_one, en.space.pair_total());
  const auto zeros = power_table(ell_zero, en.space.pair_total());
  double total = 0;
  for (const auto& c : en.classes) {
    const unsigned on = popcount(am & c.mask);
    total += c.weight * ones[on] * zeros[popcount(c.mask) - on];
  }
  return total;
}

double exact_tv(const ModelParams& params) {
  const Enumeration en(params);
  if (uninformative(params)) return 0.0;
  const Channel channel(en.space.pair_total(), params.p(), params.q());
  double total = 0;
  for (Mask a = 0; a < en.graph_states(); ++a)
    total += std::abs(en.marginal(a, channel) - en.null_prob(a, params.q()));
  return 0.5 * total;
}

double exact_tv_via_likelihood(const ModelParams& params) {
  require_interior_q(params.q());
  const Enumeration en(params);
  const double ell_one = params.p() / params.q();
  const double ell_zero = (1.0 - params.p()) / (1.0 - params.q());
  const auto ones = power_table(ell_one, en.space.pair_total());
  const auto zeros = power_table(ell_zero, en.space.pair_total());
  double total = 0;
  for (Mask a = 0; a < en.graph_states(); ++a) {
    double lr = 0;
    for (const auto& c : en.classes) {
      const unsigned on = popcount(a & c.mask);
      lr += c.weight * ones[on] * zeros[popcount(c.mask) - on];
    }
    total += en.null_prob(a, params.q()) * std::abs(lr - 1.0);
  }
  return 0.5 * total;
}

SecondMoment exact_second_moment(const ModelParams& params) {
  require_interior_q(params.q());
  if (params.p() >= 1.0) throw DegenerateNoise("second moment needs p < 1");
  const Enumeration en(params);
  const Channel channel(en.space.pair_total(), params.p(), params.q());

  SecondMoment out;
  for (Mask a = 0; a < en.graph_states(); ++a) {
    const double pa = en.marginal(a, channel);
    out.direct += pa * pa / en.null_prob(a, params.q());
  }

  const double p = params.p(), q = params.q();
  const auto factor = power_table(p * p / q + (1 - p) * (1 - p) / (1 - q), en.space.pair_total());
  for (const auto& x : en.classes)
    for (const auto& y : en.classes) out.replica += x.weight * y.weight * factor[popcount(x.mask & y.mask)];
  return out;
}

std::uint64_t Posterior::sample(std::uint64_t seed) const {
  Rng rng(seed);
  const double u = rng.uniform01();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;  // u beyond the rounded total
  return dist_.support[static_cast<std::size_t>(it - cdf_.begin())];
}

std::uint64_t Posterior::map_estimate() const {
  // support is ascending, so max_element's first-maximum rule is the tie-break
  const auto it = std::max_element(dist_.probs.begin(), dist_.probs.end());
  return dist_.support[static_cast<std::size_t>(it - dist_.probs.begin())];
}

Posterior exact_posterior(const Graph& a, const ModelParams& params) {
  const Enumeration en(params);
  const Channel channel(en.space.pair_total(), params.p(), params.q());
  const Mask am = en.space.encode(a);

  Posterior post;
  const Mask states = Mask{1} << en.space.subset_count();
  for (Mask h = 0; h < states; ++h) {
    const double w = en.prior_by_size[popcount(h)] * channel(am, en.projection_of[h]);
    if (w > 0.0) {
      post.dist_.support.push_back(h);
      post.dist_.probs.push_back(w);
      post.evidence_ += w;
    }
  }
  if (!(post.evidence_ > 0.0)) throw ZeroEvidence("observed graph has zero probability");
  double run = 0;
  for (auto& w : post.dist_.probs) {
    w /= post.evidence_;
    run += w;
    post.cdf_.push_back(run);
  }
  return post;
}

OverlapDistribution exact_overlap_distribution(const ModelParams& params, std::uint64_t seed,
                                               std::uint64_t trials) {
  if (trials == 0) throw InvalidParams("need at least one trial");
  const OracleSpace space(params.n(), params.d());
  std::unordered_map<Mask, Posterior> cache;

  OverlapDistribution out;
  double size_sum = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto planted = sample_planted(params, derive_seed(seed, {stream_tag("planted"), t}));
    const Mask am = space.encode(planted.observed);
    auto it = cache.find(am);
    if (it == cache.end()) it = cache.emplace(am, exact_posterior(planted.observed, params)).first;
    const Mask draw = it->second.sample(derive_seed(seed, {stream_tag("posterior"), t}));
    const auto overlap = static_cast<std::uint64_t>(popcount(space.encode(planted.hypergraph) & draw));
    ++out.histogram[overlap];
    out.samples.push_back(overlap);
    size_sum += static_cast<double>(planted.hypergraph.size());
  }
  out.mean_truth_size = size_sum / static_cast<double>(trials);
  return out;
}

std::string oracle_fixture_json(const ModelParams& params, const ExactDistribution& dist) {
  nlohmann::ordered_json j;
  j["params"] = {{"n", params.n()}, {"d", params.d()}, {"s", params.s()}, {"p", params.p()}, {"q", params.q()}};
  j["support_encoding"] = dist.support;
  j["probs"] = dist.probs;
  return j.dump(2) + "\n";
}

ExactDistribution parse_oracle_fixture(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  ExactDistribution out;
  out.support = j.at("support_encoding").get<std::vector<std::uint64_t>>();
  out.probs = j.at("probs").get<std::vector<double>>();
  if (out.support.size() != out.probs.size()) throw ParseError("support and probs differ in length");
  return out;
}

}  // namespace hyperproj
