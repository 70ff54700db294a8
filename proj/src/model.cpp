#include "hyperproj/model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hyperproj/combinatorics.hpp"
#include "hyperproj/error.hpp"
#include "hyperproj/rng.hpp"
#include "pair_walk.hpp"

namespace hyperproj {

namespace {

// Subsets of [n] we are willing to materialize when |H| > C(n,d) / 2.
constexpr std::uint64_t kMaxEnumeratedSubsets = 50'000'000;

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

void check_arity(Vertex n, int d) {
  if (d < 2 || d > kMaxArity) throw InvalidParams("arity d must lie in [2, 6]");
  if (n < static_cast<Vertex>(d)) throw InvalidParams("need n >= d");
}

// Uniform d-subset of [n] (Floyd's algorithm).
Hyperedge random_subset(Vertex n, int d, Rng& rng) {
  Hyperedge e;
  e.size = static_cast<std::uint8_t>(d);
  int filled = 0;
  for (Vertex j = n - static_cast<Vertex>(d) + 1; j <= n; ++j) {
    const auto t = static_cast<Vertex>(rng.uniform_int(1, j));
    const bool seen = std::find(e.v.begin(), e.v.begin() + filled, t) != e.v.begin() + filled;
    e.v[filled++] = seen ? j : t;
  }
  std::sort(e.v.begin(), e.v.begin() + d);
  return e;
}

// All d-subsets of [n] in lexicographic order.
std::vector<Hyperedge> all_subsets(Vertex n, int d) {
  std::vector<Hyperedge> out;
  Hyperedge cur;
  cur.size = static_cast<std::uint8_t>(d);
  for (int i = 0; i < d; ++i) cur.v[i] = static_cast<Vertex>(i + 1);
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur.v[i] == n - static_cast<Vertex>(d - 1 - i)) --i;
    if (i < 0) break;
    ++cur.v[i];
    for (int k = i + 1; k < d; ++k) cur.v[k] = cur.v[k - 1] + 1;
  }
  return out;
}

}  // namespace

Hyperedge::Hyperedge(std::span<const Vertex> vertices) {
  if (vertices.size() > static_cast<std::size_t>(kMaxArity))
    throw InvalidParams("hyperedge larger than the maximum arity");
  std::copy(vertices.begin(), vertices.end(), v.begin());
  size = static_cast<std::uint8_t>(vertices.size());
  std::sort(v.begin(), v.begin() + size);
}

std::size_t HyperedgeHash::operator()(const Hyperedge& e) const noexcept {
  std::uint64_t h = e.size;
  for (int i = 0; i < e.size; ++i) h = mix64(h ^ e.v[i]);
  return static_cast<std::size_t>(h);
}

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw InvalidParams("self-loop in graph");
    if (e.u < 1 || e.v > n_) throw InvalidParams("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidParams("duplicate edge in graph");
}

Graph Graph::from_sorted(Vertex n, std::vector<Edge> edges) {
  Graph g(n);
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::complete(Vertex n) {
  std::vector<Edge> edges;
  edges.reserve(pair_count(n));
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return from_sorted(n, std::move(edges));
}

bool Graph::has_edge(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

Hypergraph::Hypergraph(Vertex n, int d, std::vector<Hyperedge> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
  if (d_ < 2 || d_ > kMaxArity) throw InvalidParams("arity d must lie in [2, 6]");
  for (const auto& e : edges_) {
    if (e.size != d_) throw InvalidParams("hyperedge arity differs from d");
    const auto vs = e.vertices();
    if (vs.front() < 1 || vs.back() > n_) throw InvalidParams("hyperedge vertex out of range");
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw InvalidParams("hyperedge with repeated vertex");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidParams("duplicate hyperedge");
}

Hypergraph::Hypergraph(Vertex n, int d,
                       std::initializer_list<std::initializer_list<Vertex>> edges)
    : Hypergraph(n, d, [&] {
        std::vector<Hyperedge> out;
        for (const auto& e : edges) out.emplace_back(e);
        return out;
      }()) {}

Hypergraph Hypergraph::from_sorted(Vertex n, int d, std::vector<Hyperedge> edges) {
  Hypergraph h(n, d);
  h.edges_ = std::move(edges);
  return h;
}

bool Hypergraph::contains(const Hyperedge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void ModelParams::validate() const {
  check_arity(n_, d_);
  if (!is_probability(s_)) throw InvalidParams("s must lie in [0, 1]");
  if (!is_probability(p_)) throw InvalidParams("p must lie in [0, 1]");
  if (!is_probability(q_)) throw InvalidParams("q must lie in [0, 1]");
  if (q_ > p_) throw InvalidParams("model requires q <= p");
}

ModelParams ModelParams::from_exponents(Vertex n, int d, double delta, double alpha,
                                        double beta, double c_s, double c_p, double c_q) {
  check_arity(n, d);
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidParams("delta must lie in [0, 1)");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidParams("alpha must lie in [0, 1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw InvalidParams("beta must lie in [0, 1]");
  if (!(c_s > 0.0 && c_p > 0.0 && c_q > 0.0))
    throw InvalidParams("rate prefactors must be positive");

  ModelParams m;
  m.n_ = n;
  m.d_ = d;
  m.delta_ = delta;
  m.alpha_ = alpha;
  m.beta_ = beta;
  m.c_s_ = c_s;
  m.c_p_ = c_p;
  m.c_q_ = c_q;
  const double nn = n;
  m.s_ = std::min(1.0, c_s * std::pow(nn, -(d - 1) + delta));
  m.p_ = std::min(1.0, c_p * std::pow(nn, -1.0 + alpha));
  m.q_ = std::min(1.0, c_q * std::pow(nn, -1.0 + beta));
  m.validate();
  return m;
}

ModelParams ModelParams::from_rates(Vertex n, int d, double s, double p, double q) {
  ModelParams m;
  m.n_ = n;
  m.d_ = d;
  m.s_ = s;
  m.p_ = p;
  m.q_ = q;
  m.rates_given_ = true;
  m.validate();
  const double ln = std::log(static_cast<double>(n));
  m.delta_ = std::log(s) / ln + (d - 1);
  m.alpha_ = std::log(p) / ln + 1.0;
  m.beta_ = std::log(q) / ln + 1.0;
  return m;
}

ModelParams resolve_rates(Vertex n, int d, double delta, double alpha, double beta,
                          double c_s, double c_p, double c_q) {
  return ModelParams::from_exponents(n, d, delta, alpha, beta, c_s, c_p, c_q);
}

Hypergraph sample_hypergraph(Vertex n, int d, double s, std::uint64_t seed) {
  check_arity(n, d);
  if (!is_probability(s)) throw InvalidParams("s must lie in [0, 1]");
  const auto total = binomial_exact(n, static_cast<std::uint64_t>(d));
  if (!total) throw InvalidParams("C(n, d) exceeds 2^63; hypergraph universe too large");

  Rng rng(seed);
  const std::uint64_t k = rng.binomial(*total, s);
  if (k == 0) return Hypergraph(n, d);

  std::vector<Hyperedge> edges;
  if (k > *total / 2) {
    if (*total > kMaxEnumeratedSubsets)
      throw BudgetExceeded("dense hypergraph would need enumerating all of C(n, d)");
    edges = all_subsets(n, d);
    // partial Fisher-Yates: the first k slots become a uniform k-subset
    for (std::uint64_t i = 0; i < k; ++i) {
      const auto j = rng.uniform_int(i, *total - 1);
      std::swap(edges[i], edges[j]);
    }
    edges.resize(k);
  } else {
    std::unordered_set<Hyperedge, HyperedgeHash> chosen;
    chosen.reserve(k);
    edges.reserve(k);
    while (edges.size() < k) {
      Hyperedge e = random_subset(n, d, rng);
      if (chosen.insert(e).second) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph::from_sorted(n, d, std::move(edges));
}

Hypergraph sample_hypergraph(const ModelParams& params, std::uint64_t seed) {
  return sample_hypergraph(params.n(), params.d(), params.s(), seed);
}

Graph project(const Hypergraph& h) {
  std::vector<Edge> edges;
  const int d = h.d();
  edges.reserve(h.size() * static_cast<std::size_t>(d * (d - 1) / 2));
  for (const auto& e : h.edges())
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) edges.push_back({e.v[a], e.v[b]});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_sorted(h.n(), std::move(edges));
}

Graph apply_noise(const Graph& projection, double p, double q, std::uint64_t seed) {
  if (!is_probability(p) || !is_probability(q) || q > p)
    throw InvalidParams("noise requires 0 <= q <= p <= 1");
  Rng rng(seed);
  const auto& proj = projection.edges();

  // Non-edges switched on with probability q.
  std::vector<Edge> added;
  std::size_t cursor = 0;
  detail::for_each_bernoulli_pair(projection.n(), q, rng, [&](Edge e) {
    while (cursor < proj.size() && proj[cursor] < e) ++cursor;
    if (cursor < proj.size() && proj[cursor] == e) return;
    added.push_back(e);
  });

  // Projected edges kept with probability p.
  std::vector<Edge> kept;
  kept.reserve(proj.size());
  for (const auto& e : proj)
    if (rng.bernoulli(p)) kept.push_back(e);

  std::vector<Edge> out;
  out.reserve(added.size() + kept.size());
  std::merge(added.begin(), added.end(), kept.begin(), kept.end(), std::back_inserter(out));
  return Graph::from_sorted(projection.n(), std::move(out));
}

Graph sample_null(Vertex n, double q, std::uint64_t seed) {
  if (!is_probability(q)) throw InvalidParams("q must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  detail::for_each_bernoulli_pair(n, q, rng, [&](Edge e) { edges.push_back(e); });
  return Graph::from_sorted(n, std::move(edges));
}

PlantedSample sample_planted(const ModelParams& params, std::uint64_t seed) {
  PlantedSample out;
  out.hypergraph = sample_hypergraph(params, derive_seed(seed, {stream_tag("hypergraph")}));
  out.projection = project(out.hypergraph);
  out.observed = apply_noise(out.projection, params.p(), params.q(),
                             derive_seed(seed, {stream_tag("noise")}));
  return out;
}

std::map<int, std::uint64_t> edge_multiplicity_histogram(const Hypergraph& h) {
  std::vector<Edge> pairs;
  const int d = h.d();
  for (const auto& e : h.edges())
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) pairs.push_back({e.v[a], e.v[b]});
  std::sort(pairs.begin(), pairs.end());

  // by_coverage[c] = number of pairs covered exactly c times
  std::vector<std::uint64_t> by_coverage(1, 0);
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    const std::size_t c = j - i;
    if (by_coverage.size() <= c) by_coverage.resize(c + 1, 0);
    ++by_coverage[c];
    i = j;
  }

  std::map<int, std::uint64_t> hist;
  std::uint64_t at_least = 0;
  for (std::size_t k = by_coverage.size() - 1; k >= 1; --k) {
    at_least += by_coverage[k];
    hist[static_cast<int>(k)] = at_least;
  }
  return hist;
}

}  // namespace hyperproj
