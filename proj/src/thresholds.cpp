#include "hyperproj/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperproj/error.hpp"

namespace hyperproj {

namespace {

double pairs_within(int k) { return k * (k - 1) / 2.0; }

// Distance test against the segment {x = c, y in [lo, hi]}.
bool near_vertical(double x, double y, double c, double lo, double hi, double tol) {
  return std::abs(x - c) <= tol && y >= lo - tol && y <= hi + tol;
}

struct Candidate {
  int size;
  double cost;      // |A| - 1 - delta
  double coverage;  // C(|A|, 2)
};

class OmegaSearch {
 public:
  OmegaSearch(int d, double delta, double beta, int max_multiplicity)
      : total_pairs_(pairs_within(d)), slack_(1.0 - beta), max_mult_(max_multiplicity) {
    // one candidate per proper subset of size >= 2
    for (int size = 2; size <= d - 1; ++size) {
      const int how_many = static_cast<int>(std::lround(std::tgamma(d + 1) /
                                                        (std::tgamma(size + 1) * std::tgamma(d - size + 1))));
      for (int i = 0; i < how_many; ++i)
        cands_.push_back({size, size - 1 - delta, pairs_within(size)});
    }
    // cheapest coverage first, so the bound below is the current candidate's ratio
    std::stable_sort(cands_.begin(), cands_.end(), [](const Candidate& a, const Candidate& b) {
      return a.cost / a.coverage < b.cost / b.coverage;
    });
    best_ = value(0.0, 0.0);
  }

  FalsePositiveExponent run() {
    search(0, 0.0, 0.0);
    FalsePositiveExponent out;
    out.min_omega = best_;
    out.argmin_sizes = best_family_;
    std::sort(out.argmin_sizes.begin(), out.argmin_sizes.end());
    return out;
  }

 private:
  double value(double cost, double coverage) const {
    return cost + slack_ * std::max(0.0, total_pairs_ - coverage);
  }

  void search(std::size_t i, double cost, double coverage) {
    const double here = value(cost, coverage);
    if (here < best_) {
      best_ = here;
      best_family_ = family_;
    }
    if (i == cands_.size()) return;
    // Any extension G of the current family F satisfies
    //   omega(F ∪ G) >= cost(F) + min(rho, 1 - beta) * (C(d,2) - cov(F))_+
    // where rho is the smallest cost/coverage ratio among the remaining subsets.
    const double rho = cands_[i].cost / cands_[i].coverage;
    const double bound = cost + std::min(rho, slack_) * std::max(0.0, total_pairs_ - coverage);
    if (bound >= best_) return;

    const auto& c = cands_[i];
    for (int m = max_mult_; m >= 1; --m) {
      for (int r = 0; r < m; ++r) family_.push_back(c.size);
      search(i + 1, cost + m * c.cost, coverage + m * c.coverage);
      family_.resize(family_.size() - static_cast<std::size_t>(m));
    }
    search(i + 1, cost, coverage);
  }

  double total_pairs_;
  double slack_;
  int max_mult_;
  std::vector<Candidate> cands_;
  std::vector<int> family_;
  double best_ = 0;
  std::vector<int> best_family_;
};

}  // namespace

double detection_boundary(double delta, double alpha) { return 2.0 * (delta + alpha) - 1.0; }

ReconstructionBoundary reconstruction_boundary(int d, double delta) {
  if (d < 2) throw InvalidParams("arity must be at least 2");
  return {matched_null_limit(d), 2.0 * delta / (d * (d - 1.0)) + (d - 2.0) / d};
}

double matched_null_limit(int d) { return (d - 1.0) / (d + 1.0); }

std::string_view to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::I_Reconstructable: return "I";
    case RegionLabel::II_DetectOnlyMatchedNull: return "II";
    case RegionLabel::III_DetectSimpleNullOnly: return "III";
    case RegionLabel::Boundary: return "boundary";
  }
  return "?";
}

RegionLabel classify_region(int d, double delta, double beta, double alpha, double tol) {
  if (alpha != 1.0) throw UnsupportedRegime("region map is defined for p = Θ(1), i.e. alpha = 1");
  if (d < 3) throw InvalidParams("region map needs d >= 3");
  if (!(delta > 0.0 && delta < 1.0 && beta > 0.0 && beta < 1.0))
    throw InvalidParams("delta and beta must lie in (0, 1)");

  const double limit = matched_null_limit(d);
  const double beta_star = reconstruction_boundary(d, delta).beta_star;

  // I | II along beta = beta*(delta), delta in [0, limit]
  const bool on_recon_curve = std::abs(beta - beta_star) <= tol && delta <= limit + tol;
  // I,II | III along delta = limit, beta in [0, limit]
  const bool on_delta_edge = near_vertical(delta, beta, limit, 0.0, limit, tol);
  // II | III along beta = limit, delta in [0, limit]
  const bool on_beta_edge = near_vertical(beta, delta, limit, 0.0, limit, tol);
  if (on_recon_curve || on_delta_edge || on_beta_edge) return RegionLabel::Boundary;

  if (delta < limit && beta < beta_star) return RegionLabel::I_Reconstructable;
  if (delta < limit && beta < limit) return RegionLabel::II_DetectOnlyMatchedNull;
  return RegionLabel::III_DetectSimpleNullOnly;
}

double omega(int d, double delta, double beta, std::span<const int> subset_sizes) {
  double cost = 0, coverage = 0;
  for (int k : subset_sizes) {
    cost += k - 1 - delta;
    coverage += pairs_within(k);
  }
  return cost + (1.0 - beta) * std::max(0.0, pairs_within(d) - coverage);
}

FalsePositiveExponent false_positive_exponent(int d, double delta, double beta,
                                              int max_multiplicity) {
  if (d < 3 || d > 5) throw UnsupportedArity("false-positive exponent supports d in [3, 5]");
  if (max_multiplicity < 1 || max_multiplicity > 2)
    throw InvalidParams("multiplicity must be 1 or 2");
  if (!(delta >= 0.0 && delta < 1.0 && beta >= 0.0 && beta <= 1.0))
    throw InvalidParams("need delta in [0, 1) and beta in [0, 1]");
  auto out = OmegaSearch(d, delta, beta, max_multiplicity).run();
  out.passes = out.min_omega > d - 1 - delta;
  return out;
}

}  // namespace hyperproj
