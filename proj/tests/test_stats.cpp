#include <gtest/gtest.h>

#include <cmath>

#include "hyperproj/combinatorics.hpp"
#include "hyperproj/error.hpp"
#include "hyperproj/model.hpp"
#include "hyperproj/rng.hpp"
#include "hyperproj/stats.hpp"
#include "test_support.hpp"

using namespace hyperproj;

TEST(EdgeCount, Examples) {
  EXPECT_EQ(edge_count(Graph(5, {{1, 2}, {3, 4}})), 2u);
  EXPECT_EQ(edge_count(Graph(5)), 0u);
  EXPECT_EQ(edge_count(Graph::complete(7)), 21u);
}

TEST(EdgeCountThreshold, PlugIn) {
  EXPECT_NEAR(edge_count_threshold(ModelParams::from_rates(10, 3, 0.01, 1, 0.1)), 6.3, 1e-12);
  EXPECT_NEAR(edge_count_threshold(ModelParams::from_rates(10, 2, 0.2, 0.5, 0.1)), 6.75, 1e-12);
  EXPECT_EQ(edge_count_threshold(ModelParams::from_rates(10, 3, 0, 1, 0)), 0.0);
}

TEST(EdgeCountThreshold, Calibrated) {
  const auto p = ModelParams::from_rates(10, 3, 0.01, 1, 0.1);
  EXPECT_NEAR(edge_count_threshold(p, ThresholdRule::Calibrated), 4.5 + 0.5 * 0.9 * 0.9 * 0.01 * 3 * 120, 1e-12);
}

TEST(EdgeCountThreshold, LargeUniverseStaysFinite) {
  const auto p = resolve_rates(10000, 6, 0.5, 1.0, 0.5);
  const double t = edge_count_threshold(p);
  EXPECT_TRUE(std::isfinite(t));
  const double expect = p.q() * pair_count(10000) + 0.5 * p.p() * p.s() * 15 * binomial_real(10000, 6);
  EXPECT_NEAR(t / expect, 1.0, 1e-9);
}

TEST(CliqueCount, Examples) {
  EXPECT_EQ(clique_count(Graph::complete(4), 3), 4u);
  EXPECT_EQ(clique_count(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), 3), 0u);
  EXPECT_EQ(clique_count(Graph::complete(8), 5), 56u);
}

TEST(CliqueCount, TwoIsEdgeCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = sample_null(40, 0.2, seed);
    EXPECT_EQ(clique_count(g, 2), edge_count(g));
  }
}

TEST(CliqueCountThreshold, PlugIn) {
  EXPECT_NEAR(clique_count_threshold(ModelParams::from_rates(10, 3, 0.01, 1, 0.1)), 0.72, 1e-12);
  EXPECT_EQ(clique_count_threshold(ModelParams::from_rates(10, 3, 0, 1, 0)), 0.0);
  EXPECT_NEAR(clique_count_threshold(ModelParams::from_rates(6, 3, 0.5, 1, 1)), 25.0, 1e-12);
}

TEST(MatchedNull, Examples) {
  const auto a = matched_null_density(ModelParams::from_rates(10, 3, 0.01, 1, 0));
  EXPECT_NEAR(a.density, 0.08, 1e-15);
  EXPECT_FALSE(a.clamped);
  EXPECT_DOUBLE_EQ(matched_null_density(ModelParams::from_rates(10, 3, 0.2, 0.3, 0.3)).density, 0.3);
  EXPECT_DOUBLE_EQ(matched_null_density(ModelParams::from_rates(10, 3, 0, 0.9, 0.3)).density, 0.3);
  const auto c = matched_null_density(ModelParams::from_rates(10, 3, 0.9, 1, 0.5));
  EXPECT_TRUE(c.clamped);
  EXPECT_EQ(c.density, 1.0);
}

TEST(MatchedNull, EqualisesExpectedEdges) {
  const auto params = resolve_rates(300, 3, 0.4, 1.0, 0.3);
  const double qt = matched_null_density(params).density;
  double planted = 0, null = 0;
  const int seeds = 300;
  for (int s = 0; s < seeds; ++s) {
    planted += sample_planted(params, static_cast<std::uint64_t>(s)).observed.edge_count();
    null += sample_null(300, qt, static_cast<std::uint64_t>(s) + 5000).edge_count();
  }
  // relative agreement; the formula ignores doubly covered pairs
  EXPECT_NEAR(planted / null, 1.0, 0.02);
}

TEST(LikelihoodFactors, Examples) {
  const auto a = likelihood_edge_factors(0.3, 0.3);
  EXPECT_DOUBLE_EQ(a.ell_one, 1);
  EXPECT_DOUBLE_EQ(a.ell_zero, 1);
  EXPECT_NEAR(a.second_moment_factor, 1, 1e-15);
  const auto b = likelihood_edge_factors(0.8, 0.2);
  EXPECT_NEAR(b.ell_one, 4, 1e-15);
  EXPECT_NEAR(b.ell_zero, 0.25, 1e-15);
  EXPECT_NEAR(b.second_moment_factor, 3.25, 1e-14);
  EXPECT_NEAR(likelihood_edge_factors(0.5, 0.5).second_moment_factor, 1, 1e-15);
  EXPECT_THROW(likelihood_edge_factors(0.5, 0.0), DegenerateNoise);
  EXPECT_THROW(likelihood_edge_factors(1.0, 0.2), DegenerateNoise);
  EXPECT_THROW(likelihood_edge_factors(0.2, 0.5), DegenerateNoise);
}

TEST(LikelihoodFactors, UnitMeanUnderNull) {
  for (double q = 0.05; q < 1; q += 0.1)
    for (double p = q; p < 1; p += 0.07) {
      const auto f = likelihood_edge_factors(p, q);
      EXPECT_NEAR(q * f.ell_one + (1 - q) * f.ell_zero, 1.0, 1e-14) << p << ' ' << q;
    }
}

TEST(Decision, TieGoesToPlanted) {
  EXPECT_EQ(decide(5, 5), Decision::Planted);
  EXPECT_EQ(decide(4.999, 5), Decision::Null);
  const auto o = make_outcome(Statistic::CliqueCount, 7, 3);
  EXPECT_EQ(o.decision, Decision::Planted);
  EXPECT_EQ(to_string(o.statistic), "clique-count");
}

TEST(EdgeCount, EqualRatesPlantedMatchesNull) {
  const auto params = ModelParams::from_rates(60, 3, 0.002, 0.1, 0.1);
  std::vector<double> planted, null;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    planted.push_back(edge_count(sample_planted(params, s).observed));
    null.push_back(edge_count(sample_null(60, 0.1, derive_seed(s, {stream_tag("other")}))));
  }
  EXPECT_LT(testsupport::ks_statistic(planted, null), testsupport::ks_critical(2000, 2000, 0.001));
}

TEST(Intersection, Examples) {
  const Hypergraph a(4, 3, {{1, 2, 3}});
  EXPECT_EQ(intersection_statistic(a, Hypergraph(4, 3, {{1, 2, 4}})), 1u);
  EXPECT_EQ(intersection_statistic(a, a), 3u);
  EXPECT_EQ(intersection_statistic(a, Hypergraph(4, 3)), 0u);
}

TEST(Intersection, ExpectedValues) {
  const auto a = expected_intersection(4, 3, 0.5);
  EXPECT_NEAR(a.exact, 3.375, 1e-12);
  EXPECT_NEAR(a.approx, 6.0, 1e-12);
  const auto z = expected_intersection(10, 3, 0.0);
  EXPECT_EQ(z.exact, 0.0);
  EXPECT_EQ(z.approx, 0.0);
  const auto small = expected_intersection(30, 3, 1e-4);
  EXPECT_GE(small.exact / small.approx, 0.99);
  EXPECT_LE(small.exact / small.approx, 1.0);
}

TEST(Intersection, ExactMeanByEnumeration) {
  // all 2^4 x 2^4 hypergraph pairs at n=4, d=3, s=0.5
  const Hyperedge all[4] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  double total = 0;
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      std::vector<Hyperedge> ex, ey;
      for (int k = 0; k < 4; ++k) {
        if (x >> k & 1) ex.push_back(all[k]);
        if (y >> k & 1) ey.push_back(all[k]);
      }
      total += intersection_statistic(Hypergraph(4, 3, ex), Hypergraph(4, 3, ey)) / 256.0;
    }
  EXPECT_NEAR(total, expected_intersection(4, 3, 0.5).exact, 1e-12);
}

TEST(Intersection, MonteCarloMean) {
  const Vertex n = 40;
  const double s = 0.002;
  std::vector<double> y;
  for (std::uint64_t t = 0; t < 10000; ++t)
    y.push_back(intersection_statistic(sample_hypergraph(n, 3, s, derive_seed(t, {1})),
                                       sample_hypergraph(n, 3, s, derive_seed(t, {2}))));
  const double se = std::sqrt(testsupport::variance(y) / y.size());
  EXPECT_NEAR(testsupport::mean(y), expected_intersection(n, 3, s).exact, 4 * se);
}
