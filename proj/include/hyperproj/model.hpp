#pragma once

// Planted model: a random d-uniform hypergraph, its projection (clique
// expansion) and a noisy observation of the projection.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace hyperproj {

using Vertex = std::uint32_t;
inline constexpr int kMaxArity = 6;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A d-subset of [n] in ascending order; slots past `size` are zero.
struct Hyperedge {
  std::array<Vertex, kMaxArity> v{};
  std::uint8_t size = 0;

  Hyperedge() = default;
  // Sorts the given vertices. Does not range-check; Hypergraph does.
  explicit Hyperedge(std::span<const Vertex> vertices);
  Hyperedge(std::initializer_list<Vertex> vertices)
      : Hyperedge(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

  std::span<const Vertex> vertices() const { return {v.data(), size}; }
  friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;
};

struct HyperedgeHash {
  std::size_t operator()(const Hyperedge& e) const noexcept;
};

// Simple graph on vertices 1..n with a sorted, duplicate-free edge list.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : n_(n) {}
  // Orients each pair, sorts, and rejects self-loops, duplicates and
  // out-of-range endpoints with InvalidParams.
  Graph(Vertex n, std::vector<Edge> edges);

  static Graph complete(Vertex n);

  Vertex n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Vertex i, Vertex j) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  // Skips validation; the caller guarantees a sorted, canonical edge list.
  static Graph from_sorted(Vertex n, std::vector<Edge> edges);

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
};

// Set of d-subsets of [n], kept sorted and duplicate-free.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(Vertex n, int d) : n_(n), d_(d) {}
  // Validates arity, range and distinctness; sorts the edge list.
  Hypergraph(Vertex n, int d, std::vector<Hyperedge> edges);
  Hypergraph(Vertex n, int d, std::initializer_list<std::initializer_list<Vertex>> edges);

  Vertex n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Hyperedge& e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  // Skips validation; the caller guarantees sorted, distinct, in-range edges.
  static Hypergraph from_sorted(Vertex n, int d, std::vector<Hyperedge> edges);

 private:
  Vertex n_ = 0;
  int d_ = 0;
  std::vector<Hyperedge> edges_;
};

// Experiment parameters. Rates are either resolved from exponents
//   s = c_s n^{-(d-1)+delta},  p = c_p n^{-1+alpha},  q = c_q n^{-1+beta}
// (each clamped to 1), or given directly, in which case the exponents are
// back-computed as base-n logarithms.
class ModelParams {
 public:
  // Placeholder only; use the factories for anything that gets sampled.
  ModelParams() = default;
  static ModelParams from_exponents(Vertex n, int d, double delta, double alpha, double beta,
                                    double c_s = 1.0, double c_p = 1.0, double c_q = 1.0);
  static ModelParams from_rates(Vertex n, int d, double s, double p, double q);

  Vertex n() const { return n_; }
  int d() const { return d_; }
  double delta() const { return delta_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double c_s() const { return c_s_; }
  double c_p() const { return c_p_; }
  double c_q() const { return c_q_; }
  double s() const { return s_; }
  double p() const { return p_; }
  double q() const { return q_; }
  bool rates_given() const { return rates_given_; }

 private:
  void validate() const;

  Vertex n_ = 0;
  int d_ = 0;
  double delta_ = 0, alpha_ = 0, beta_ = 0;
  double c_s_ = 1, c_p_ = 1, c_q_ = 1;
  double s_ = 0, p_ = 0, q_ = 0;
  bool rates_given_ = false;
};

ModelParams resolve_rates(Vertex n, int d, double delta, double alpha, double beta,
                          double c_s = 1.0, double c_p = 1.0, double c_q = 1.0);

// Includes each d-subset independently with probability s. Draws
// |H| ~ Binomial(C(n,d), s) and then a uniform set of that many subsets.
Hypergraph sample_hypergraph(Vertex n, int d, double s, std::uint64_t seed);
Hypergraph sample_hypergraph(const ModelParams& params, std::uint64_t seed);

// (i, j) is an edge iff some hyperedge contains both.
Graph project(const Hypergraph& h);

// Keeps each projected edge with probability p and adds each non-edge with
// probability q.
Graph apply_noise(const Graph& projection, double p, double q, std::uint64_t seed);

// Erdos-Renyi graph G(n, q).
Graph sample_null(Vertex n, double q, std::uint64_t seed);

struct PlantedSample {
  Hypergraph hypergraph;
  Graph projection;
  Graph observed;
};

// Draws (H, P(H), A) with the hypergraph and noise streams derived from `seed`.
PlantedSample sample_planted(const ModelParams& params, std::uint64_t seed);

// k -> |M_k|, the number of projected pairs covered by at least k hyperedges.
// Empty for an empty hypergraph.
std::map<int, std::uint64_t> edge_multiplicity_histogram(const Hypergraph& h);

}  // namespace hyperproj
