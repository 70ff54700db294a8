#pragma once

// Closed-form phase boundaries, region classification at p = Θ(1), and the
// false-positive exponent of the clique estimator.

#include <span>
#include <string_view>
#include <vector>

namespace hyperproj {

// Edge-count detection succeeds for beta below 2(delta + alpha) - 1.
double detection_boundary(double delta, double alpha);

struct ReconstructionBoundary {
  double delta_star = 0;  // (d-1)/(d+1)
  double beta_star = 0;   // 2 delta / (d(d-1)) + (d-2)/d
};

ReconstructionBoundary reconstruction_boundary(int d, double delta);

// Matched-null detection is guaranteed when delta and beta are both below
// this value, (d-1)/(d+1).
double matched_null_limit(int d);

enum class RegionLabel {
  I_Reconstructable,
  II_DetectOnlyMatchedNull,
  III_DetectSimpleNullOnly,
  Boundary,
};

std::string_view to_string(RegionLabel r);

inline constexpr double kRegionTolerance = 1e-12;

// Region of (delta, beta) for p = Θ(1) (alpha == 1):
//   I    delta < delta*, beta < beta*(delta)
//   II   delta, beta < (d-1)/(d+1), outside I
//   III  everything else
// Points within `tol` of a dividing segment are Boundary. Throws
// UnsupportedRegime for alpha != 1 and InvalidParams for d < 3 or
// delta, beta outside (0, 1).
RegionLabel classify_region(int d, double delta, double beta, double alpha = 1.0,
                            double tol = kRegionTolerance);

// omega(A_1..A_k) = sum (|A_l| - 1 - delta) + (1 - beta) (C(d,2) - sum C(|A_l|,2))_+
double omega(int d, double delta, double beta, std::span<const int> subset_sizes);

struct FalsePositiveExponent {
  double min_omega = 0;
  std::vector<int> argmin_sizes;  // subset sizes of a minimizing family, ascending
  bool passes = false;            // min_omega > d - 1 - delta
};

// Minimum of omega over all families of proper subsets A ⊂ Ψ, |Ψ| = d, with
// 2 <= |A| <= d-1 (the empty family included), each subset used at most
// `max_multiplicity` times. Branch and bound over the subsets of Ψ. Throws
// UnsupportedArity for d outside [3, 5].
FalsePositiveExponent false_positive_exponent(int d, double delta, double beta,
                                              int max_multiplicity = 1);

}  // namespace hyperproj
