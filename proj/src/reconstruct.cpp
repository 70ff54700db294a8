#include "hyperproj/reconstruct.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hyperproj/clique.hpp"
#include "hyperproj/combinatorics.hpp"
#include "hyperproj/error.hpp"

namespace hyperproj {

Hypergraph clique_estimator(const Graph& a, int d, std::uint64_t budget) {
  if (d < 2 || d > kMaxArity) throw UnsupportedArity("arity must lie in [2, 6]");
  std::vector<Hyperedge> found;
  const OrientedGraph og(a);
  for_each_clique(og, d, [&](std::span<const Vertex> clique) {
    if (found.size() >= budget)
      throw CliqueBudgetExceeded("more than " + std::to_string(budget) + " " +
                                 std::to_string(d) + "-cliques in the observation");
    found.emplace_back(clique);
  });
  std::sort(found.begin(), found.end());
  return Hypergraph::from_sorted(a.n(), d, std::move(found));
}

ReconMetrics recon_metrics(const Hypergraph& truth, const Hypergraph& estimate, double s) {
  if (truth.n() != estimate.n() || truth.d() != estimate.d())
    throw InvalidParams("hypergraphs differ in n or d");
  ReconMetrics m;
  const auto& h = truth.edges();
  const auto& g = estimate.edges();
  std::size_t i = 0, j = 0, shared = 0;
  while (i < h.size() && j < g.size()) {
    if (h[i] < g[j]) {
      ++i;
    } else if (g[j] < h[i]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  m.missed = h.size() - shared;
  m.false_pos = g.size() - shared;
  m.sym_diff = m.missed + m.false_pos;
  m.normalizer = s * binomial_real(truth.n(), static_cast<std::uint64_t>(truth.d()));
  if (m.normalizer > 0) {
    m.normalized_error = static_cast<double>(m.sym_diff) / m.normalizer;
  } else {
    m.normalized_error = m.sym_diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return m;
}

Hypergraph empty_set(const Hypergraph& h, const Graph& a) {
  if (h.n() != a.n()) throw InvalidParams("hypergraph and graph differ in n");
  std::vector<Hyperedge> out;
  const int d = h.d();
  for (const auto& e : h.edges()) {
    bool touched = false;
    for (int x = 0; x < d && !touched; ++x)
      for (int y = x + 1; y < d && !touched; ++y) touched = a.has_edge(e.v[x], e.v[y]);
    if (!touched) out.push_back(e);
  }
  return Hypergraph::from_sorted(h.n(), d, std::move(out));
}

}  // namespace hyperproj
