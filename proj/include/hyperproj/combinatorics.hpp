#pragma once

#include <cstdint>
#include <optional>

namespace hyperproj {

// Exact C(n, k), or nullopt when the value exceeds 2^63 - 1.
std::optional<std::uint64_t> binomial_exact(std::uint64_t n, std::uint64_t k);

// log C(n, k) via lgamma; -inf when k > n.
double log_binomial(double n, double k);

// C(n, k) as a double. Exact below 2^53, log-domain beyond 2^63, +inf if the
// value itself is not representable.
double binomial_real(std::uint64_t n, std::uint64_t k);

// Number of unordered vertex pairs, C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) { return n * (n - 1) / 2; }

// Lexicographic rank of pair (i, j), 1 <= i < j <= n, among all pairs of [n].
constexpr std::uint64_t pair_rank(std::uint64_t n, std::uint64_t i, std::uint64_t j) {
  // pairs starting with a < i: sum_{a=1}^{i-1} (n - a)
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

}  // namespace hyperproj
