#include <gtest/gtest.h>

#include <cmath>

#include "hyperproj/error.hpp"
#include "hyperproj/thresholds.hpp"

using namespace hyperproj;

TEST(DetectionBoundary, PlugIn) {
  EXPECT_NEAR(detection_boundary(0.3, 1.0), 1.6, 1e-15);
  EXPECT_NEAR(detection_boundary(0.2, 0.3), 0.0, 1e-15);
  EXPECT_EQ(detection_boundary(0.0, 0.0), -1.0);
}

TEST(ReconstructionBoundary, PlugIn) {
  EXPECT_DOUBLE_EQ(reconstruction_boundary(3, 0.3).delta_star, 0.5);
  EXPECT_NEAR(reconstruction_boundary(3, 0.3).beta_star, 13.0 / 30, 1e-15);
  const auto b = reconstruction_boundary(4, 0.3);
  EXPECT_NEAR(b.delta_star, 0.6, 1e-15);
  EXPECT_NEAR(b.beta_star, 0.55, 1e-15);
}

TEST(ReconstructionBoundary, BetaStarMonotone) {
  for (int d = 3; d <= 6; ++d)
    for (double delta = 0; delta < 0.95; delta += 0.05) {
      EXPECT_LT(reconstruction_boundary(d, delta).beta_star, reconstruction_boundary(d, delta + 0.05).beta_star);
      EXPECT_LT(reconstruction_boundary(d, delta).beta_star, reconstruction_boundary(d + 1, delta).beta_star);
    }
}

TEST(ClassifyRegion, Examples) {
  EXPECT_EQ(classify_region(3, 0.3, 0.3), RegionLabel::I_Reconstructable);
  EXPECT_EQ(classify_region(3, 0.6, 0.6), RegionLabel::III_DetectSimpleNullOnly);
  // matched-null guarantee needs both exponents below (d-1)/(d+1) = 0.5
  EXPECT_EQ(classify_region(3, 0.6, 0.3), RegionLabel::III_DetectSimpleNullOnly);
  EXPECT_EQ(classify_region(3, 0.3, 0.45), RegionLabel::II_DetectOnlyMatchedNull);
  EXPECT_EQ(classify_region(4, 0.5, 0.59), RegionLabel::II_DetectOnlyMatchedNull);
}

TEST(ClassifyRegion, Boundaries) {
  EXPECT_EQ(classify_region(3, 0.3, 13.0 / 30), RegionLabel::Boundary);
  EXPECT_EQ(classify_region(3, 0.5, 0.2), RegionLabel::Boundary);
  EXPECT_EQ(classify_region(3, 0.2, 0.5), RegionLabel::Boundary);
  EXPECT_EQ(classify_region(3, 0.7, 0.5), RegionLabel::III_DetectSimpleNullOnly);
}

TEST(ClassifyRegion, Errors) {
  EXPECT_THROW(classify_region(3, 0.3, 0.3, 0.5), UnsupportedRegime);
  EXPECT_THROW(classify_region(2, 0.3, 0.3), InvalidParams);
  EXPECT_THROW(classify_region(3, 0.0, 0.3), InvalidParams);
  EXPECT_THROW(classify_region(3, 0.3, 1.0), InvalidParams);
}

TEST(ClassifyRegion, StableUnderTinyPerturbation) {
  for (int d = 3; d <= 5; ++d)
    for (double delta = 0.05; delta < 1; delta += 0.1)
      for (double beta = 0.05; beta < 1; beta += 0.1) {
        const auto base = classify_region(d, delta, beta);
        for (double e : {-1e-13, 1e-13}) {
          EXPECT_EQ(classify_region(d, delta + e, beta), base);
          EXPECT_EQ(classify_region(d, delta, beta + e), base);
        }
      }
}

TEST(Omega, Formula) {
  const int pair[] = {2};
  EXPECT_NEAR(omega(3, 0.3, 0.4, {}), 1.8, 1e-15);
  EXPECT_NEAR(omega(3, 0.3, 0.4, pair), (2 - 1 - 0.3) + 0.6 * 2, 1e-15);
  const int three_pairs[] = {2, 2, 2};
  EXPECT_NEAR(omega(3, 0.3, 0.4, three_pairs), 3 * 0.7, 1e-15);
}

TEST(FalsePositiveExponent, Examples) {
  const auto a = false_positive_exponent(3, 0.3, 0.4);
  EXPECT_NEAR(a.min_omega, 1.8, 1e-12);
  EXPECT_TRUE(a.argmin_sizes.empty());
  EXPECT_TRUE(a.passes);

  const auto b = false_positive_exponent(3, 0.3, 13.0 / 30);
  EXPECT_NEAR(b.min_omega, 1.7, 1e-12);

  const auto c = false_positive_exponent(3, 0.3, 0.5);
  EXPECT_NEAR(c.min_omega, 1.5, 1e-12);
  EXPECT_FALSE(c.passes);

  EXPECT_THROW(false_positive_exponent(2, 0.3, 0.5), UnsupportedArity);
  EXPECT_THROW(false_positive_exponent(6, 0.3, 0.5), UnsupportedArity);
}

TEST(FalsePositiveExponent, MatchesExhaustiveSearchAtDThree) {
  // d=3: admissible subsets are the three pairs; all 8 families by hand
  for (double delta = 0.05; delta < 1; delta += 0.1)
    for (double beta = 0.05; beta < 1; beta += 0.1) {
      double best = 1e300;
      for (int k = 0; k <= 3; ++k) best = std::min(best, k * (1 - delta) + (1 - beta) * (3 - k));
      EXPECT_NEAR(false_positive_exponent(3, delta, beta).min_omega, best, 1e-12);
    }
}

TEST(FalsePositiveExponent, RepeatsNeverHelp) {
  for (int d = 3; d <= 4; ++d)
    for (double delta = 0.1; delta < 1; delta += 0.2)
      for (double beta = 0.1; beta < 1; beta += 0.2) {
        const auto one = false_positive_exponent(d, delta, beta, 1);
        const auto two = false_positive_exponent(d, delta, beta, 2);
        EXPECT_NEAR(one.min_omega, two.min_omega, 1e-12);
      }
}

TEST(FalsePositiveExponent, AgreesWithClosedForm) {
  for (int d = 3; d <= 5; ++d) {
    const double dstar = (d - 1.0) / (d + 1.0);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        const double delta = 0.05 + 0.0937 * i;
        const double beta = 0.03 + 0.0971 * j;
        const double bstar = 2 * delta / (d * (d - 1.0)) + (d - 2.0) / d;
        if (std::abs(delta - dstar) < 1e-9 || std::abs(beta - bstar) < 1e-9) continue;
        const bool expect = delta < dstar && beta < bstar;
        EXPECT_EQ(false_positive_exponent(d, delta, beta).passes, expect) << d << ' ' << delta << ' ' << beta;
      }
  }
}
