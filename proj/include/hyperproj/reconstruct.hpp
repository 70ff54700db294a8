#pragma once

#include <cstdint>

#include "hyperproj/model.hpp"

namespace hyperproj {

inline constexpr std::uint64_t kDefaultCliqueBudget = 100'000'000;

// Every d-clique of A, as a hypergraph. Throws CliqueBudgetExceeded once more
// than `budget` cliques have been found.
Hypergraph clique_estimator(const Graph& a, int d, std::uint64_t budget = kDefaultCliqueBudget);

struct ReconMetrics {
  std::uint64_t sym_diff = 0;   // |H △ Ĥ|
  std::uint64_t missed = 0;     // |H \ Ĥ|
  std::uint64_t false_pos = 0;  // |Ĥ \ H|
  double normalizer = 0;        // s C(n,d)
  double normalized_error = 0;  // sym_diff / normalizer
};

// normalized_error is +inf when s == 0 and sym_diff > 0, and 0 when both vanish.
ReconMetrics recon_metrics(const Hypergraph& truth, const Hypergraph& estimate, double s);

// Hyperedges of H none of whose internal pairs appear in A.
Hypergraph empty_set(const Hypergraph& h, const Graph& a);

}  // namespace hyperproj
