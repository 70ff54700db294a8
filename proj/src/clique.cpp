#include "hyperproj/clique.hpp"

#include "hyperproj/error.hpp"

namespace hyperproj {

OrientedGraph::OrientedGraph(const Graph& g) {
  const std::uint32_t n = g.n();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u - 1].push_back(e.v - 1);
    adj[e.v - 1].push_back(e.u - 1);
  }

  // Smallest-last ordering with degree buckets.
  std::vector<std::uint32_t> degree(n);
  std::uint32_t max_deg = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(adj[v].size());
    max_deg = std::max(max_deg, degree[v]);
  }
  std::vector<std::vector<std::uint32_t>> buckets(max_deg + 1);
  for (std::uint32_t v = 0; v < n; ++v) buckets[degree[v]].push_back(v);

  std::vector<std::uint32_t> rank(n, 0);
  std::vector<bool> removed(n, false);
  std::uint32_t next_rank = 0;
  std::uint32_t lo = 0;
  while (next_rank < n) {
    while (buckets[lo].empty()) ++lo;
    const auto v = buckets[lo].back();
    buckets[lo].pop_back();
    if (removed[v] || degree[v] != lo) continue;  // stale bucket entry
    removed[v] = true;
    rank[v] = next_rank++;
    for (auto w : adj[v]) {
      if (removed[w]) continue;
      --degree[w];
      buckets[degree[w]].push_back(w);
      if (degree[w] < lo) lo = degree[w];
    }
  }

  labels_.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) labels_[rank[v]] = v + 1;

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto w : adj[v])
      if (rank[w] > rank[v]) ++offsets_[rank[v] + 1];
  for (std::uint32_t r = 0; r < n; ++r) offsets_[r + 1] += offsets_[r];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto w : adj[v])
      if (rank[w] > rank[v]) targets_[fill[rank[v]]++] = rank[w];
  for (std::uint32_t r = 0; r < n; ++r) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[r]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[r + 1]));
    max_out_ = std::max(max_out_, static_cast<std::uint32_t>(offsets_[r + 1] - offsets_[r]));
  }
}

namespace {

std::uint64_t count_from(const OrientedGraph& g, std::span<const std::uint32_t> cands, int remaining,
                         std::vector<std::vector<std::uint32_t>>& levels) {
  if (remaining == 1) return cands.size();
  auto& buf = levels[static_cast<std::size_t>(remaining)];
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto rest = cands.subspan(i + 1);
    if (rest.size() + 1 < static_cast<std::size_t>(remaining)) break;
    const auto nv = g.out(cands[i]);
    const auto end = std::set_intersection(rest.begin(), rest.end(), nv.begin(), nv.end(), buf.begin());
    const auto m = static_cast<std::size_t>(end - buf.begin());
    if (m + 1 < static_cast<std::size_t>(remaining)) continue;
    total += count_from(g, std::span<const std::uint32_t>(buf.data(), m), remaining - 1, levels);
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, int k) {
  if (k < 2 || k > kMaxArity) throw UnsupportedArity("clique size must lie in [2, 6]");
  if (k == 2) return g.edge_count();
  const OrientedGraph og(g);
  std::vector<std::vector<std::uint32_t>> levels(static_cast<std::size_t>(k) + 1);
  for (auto& l : levels) l.resize(og.max_out_degree());
  std::uint64_t total = 0;
  for (std::uint32_t u = 0; u < og.size(); ++u)
    total += count_from(og, og.out(u), k - 1, levels);
  return total;
}

}  // namespace hyperproj
