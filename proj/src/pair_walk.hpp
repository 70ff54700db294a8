#pragma once

#include <cstdint>

#include "hyperproj/combinatorics.hpp"
#include "hyperproj/model.hpp"
#include "hyperproj/rng.hpp"

namespace hyperproj::detail {

// Visits, in lexicographic order, each pair of [n] selected independently
// with probability prob. Uses geometric skips, so cost is proportional to the
// number of selected pairs plus the number of rows.
template <class Visit>
void for_each_bernoulli_pair(Vertex n, double prob, Rng& rng, Visit&& visit) {
  const std::uint64_t total = pair_count(n);
  if (total == 0 || prob <= 0.0) return;

  std::uint64_t next = 0;  // rank of the next candidate pair
  Vertex row = 1;
  std::uint64_t row_start = 0;
  while (true) {
    const std::uint64_t gap = rng.geometric(prob);
    if (gap >= total - next) return;
    const std::uint64_t pos = next + gap;
    while (pos >= row_start + (n - row)) {
      row_start += n - row;
      ++row;
    }
    visit(Edge{row, static_cast<Vertex>(row + 1 + (pos - row_start))});
    next = pos + 1;
    if (next >= total) return;
  }
}

}  // namespace hyperproj::detail
