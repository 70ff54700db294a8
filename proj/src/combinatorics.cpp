#include "hyperproj/combinatorics.hpp"

#include <cmath>
#include <limits>

namespace hyperproj {

std::optional<std::uint64_t> binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = std::numeric_limits<std::int64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double binomial_real(std::uint64_t n, std::uint64_t k) {
  if (auto exact = binomial_exact(n, k)) return static_cast<double>(*exact);
  return std::exp(log_binomial(static_cast<double>(n), static_cast<double>(k)));
}

}  // namespace hyperproj
