#pragma once

// k-clique listing on sparse graphs. Vertices are ranked by a degeneracy
// (smallest-last) order and every edge points from lower to higher rank, so
// each clique is found exactly once, from its lowest-ranked vertex, by
// intersecting sorted out-neighbourhoods.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperproj/model.hpp"

namespace hyperproj {

class OrientedGraph {
 public:
  explicit OrientedGraph(const Graph& g);

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
  // Out-neighbours of the vertex with this rank, ascending by rank.
  std::span<const std::uint32_t> out(std::uint32_t rank) const {
    return {targets_.data() + offsets_[rank], targets_.data() + offsets_[rank + 1]};
  }
  Vertex label(std::uint32_t rank) const { return labels_[rank]; }
  std::uint32_t max_out_degree() const { return max_out_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<Vertex> labels_;
  std::uint32_t max_out_ = 0;
};

namespace detail {

template <class Emit>
class CliqueLister {
 public:
  CliqueLister(const OrientedGraph& g, int k, Emit& emit)
      : g_(g), k_(k), emit_(emit), levels_(static_cast<std::size_t>(k)) {
    for (auto& l : levels_) l.resize(g.max_out_degree());
    stack_.resize(static_cast<std::size_t>(k));
  }

  void run() {
    for (std::uint32_t u = 0; u < g_.size(); ++u) {
      const auto out = g_.out(u);
      if (out.size() + 1 < static_cast<std::size_t>(k_)) continue;
      stack_[0] = u;
      extend(out, 1);
    }
  }

 private:
  void extend(std::span<const std::uint32_t> cands, int depth) {
    if (depth == k_ - 1) {
      for (auto v : cands) {
        stack_[depth] = v;
        report();
      }
      return;
    }
    auto& buf = levels_[static_cast<std::size_t>(depth)];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto v = cands[i];
      const auto rest = cands.subspan(i + 1);
      const auto nv = g_.out(v);
      const auto end = std::set_intersection(rest.begin(), rest.end(), nv.begin(), nv.end(), buf.begin());
      const auto m = static_cast<std::size_t>(end - buf.begin());
      if (m + 1 + static_cast<std::size_t>(depth) < static_cast<std::size_t>(k_)) continue;
      stack_[depth] = v;
      extend(std::span<const std::uint32_t>(buf.data(), m), depth + 1);
    }
  }

  void report() {
    for (int i = 0; i < k_; ++i) labels_[i] = g_.label(stack_[i]);
    std::sort(labels_.begin(), labels_.begin() + k_);
    emit_(std::span<const Vertex>(labels_.data(), static_cast<std::size_t>(k_)));
  }

  const OrientedGraph& g_;
  int k_;
  Emit& emit_;
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::uint32_t> stack_;
  std::array<Vertex, kMaxArity> labels_{};
};

}  // namespace detail

// Calls emit(std::span<const Vertex>) once per k-clique, vertices ascending.
// Emission order follows the degeneracy ranking, not lexicographic order.
template <class Emit>
void for_each_clique(const OrientedGraph& g, int k, Emit&& emit) {
  detail::CliqueLister<std::remove_reference_t<Emit>> lister(g, k, emit);
  lister.run();
}

// Number of k-cliques, 2 <= k <= 6.
std::uint64_t count_cliques(const Graph& g, int k);

}  // namespace hyperproj
