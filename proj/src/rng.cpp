#include "hyperproj/rng.hpp"

#include <boost/random/binomial_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <cmath>
#include <limits>

namespace hyperproj {

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  boost::random::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  return dist(engine_);
}

std::uint64_t Rng::geometric(double p) {
  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
  if (p <= 0.0) return kInf;
  if (p >= 1.0) return 0;
  // 1 - U lies in (0, 1], so the log is finite.
  const double u = 1.0 - uniform01();
  const double g = std::floor(std::log(u) / std::log1p(-p));
  if (!(g < 1.8e19)) return kInf;
  return static_cast<std::uint64_t>(g);
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  boost::random::binomial_distribution<std::int64_t, double> dist(
      static_cast<std::int64_t>(trials), p);
  return static_cast<std::uint64_t>(dist(engine_));
}

}  // namespace hyperproj
