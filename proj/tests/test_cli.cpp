#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hyperproj/cli.hpp"
#include "hyperproj/io.hpp"
#include "hyperproj/model.hpp"
#include "test_support.hpp"

using namespace hyperproj;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperproj");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Version) {
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(std::string(version())), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"sample", "--n", "20", "--d", "3", "--delta", "0.3"}).code, 1);  // no seed
  EXPECT_EQ(run({"sample", "--n", "20", "--d", "3", "--delta", "1.5", "--seed", "1"}).code, 1);
  EXPECT_EQ(run({"detect", "--n", "20", "--delta", "0.3", "--seed", "1", "--statistic", "bogus"}).code, 1);
}

TEST(Cli, JsonErrors) {
  const auto r = run({"detect", "--n", "100", "--delta", "0.2", "--alpha", "0.3", "--beta", "0.8",
                      "--seed", "1", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "InvalidParams");
}

TEST(Cli, BudgetErrorExitsTwo) {
  const auto r = run({"sweep", "--n", "50", "--delta", "0.3", "--alpha", "1", "--beta", "0.2,0.4",
                      "--trials", "10", "--seed", "1", "--max-trials", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("exceeds"), std::string::npos);
}

TEST(Cli, SampleIsByteIdentical) {
  const auto a = run({"sample", "--n", "20", "--d", "3", "--delta", "0.3", "--seed", "7"});
  const auto b = run({"sample", "--n", "20", "--d", "3", "--delta", "0.3", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# s: "), std::string::npos);
  EXPECT_NE(a.out.find("# p: 1\n"), std::string::npos);
  EXPECT_NE(a.out.find("# q: "), std::string::npos);
  EXPECT_NE(a.out.find("# hyperproj " + std::string(version())), std::string::npos);
}

TEST(Cli, DirectRatesOverrideWithNotice) {
  const auto r = run({"sample", "--n", "20", "--d", "3", "--delta", "0.3", "--s", "0.05", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("notice"), std::string::npos);
  EXPECT_NE(r.out.find("# s: 0.05\n"), std::string::npos);
}

TEST(Cli, PipelineMatchesInProcess) {
  testsupport::TempDir dir;
  const auto h = dir.file("h.txt"), g = dir.file("g.txt"), a = dir.file("a.txt"), e = dir.file("e.txt");
  ASSERT_EQ(run({"sample", "--n", "60", "--d", "3", "--delta", "0.5", "--seed", "11", "-o", h}).code, 0);
  ASSERT_EQ(run({"project", "-i", h, "-o", g}).code, 0);
  ASSERT_EQ(run({"noise", "-i", g, "--p", "0.9", "--q", "0.05", "--seed", "12", "-o", a}).code, 0);
  ASSERT_EQ(run({"reconstruct", "-i", a, "--arity", "3", "-o", e}).code, 0);

  const auto params = resolve_rates(60, 3, 0.5, 1.0, 0.0);
  const auto hh = sample_hypergraph(params, 11);
  const auto gg = project(hh);
  const auto aa = apply_noise(gg, 0.9, 0.05, 12);
  EXPECT_EQ(read_hypergraph_file(h), hh);
  EXPECT_EQ(read_graph_file(g), gg);
  EXPECT_EQ(read_graph_file(a), aa);

  // provenance travels with each artifact
  const auto noisy = slurp(a);
  EXPECT_NE(noisy.find("# seed: 11\n"), std::string::npos);
  EXPECT_NE(noisy.find("# noise_seed: 12\n"), std::string::npos);
  EXPECT_NE(slurp(e).find("# command: reconstruct\n"), std::string::npos);
}

TEST(Cli, Thresholds) {
  const auto r = run({"thresholds", "--d", "3", "--delta", "0.3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta* = (d-1)/(d+1) = 0.5\n"), std::string::npos);
  EXPECT_NE(r.out.find("= 0.4333333333333333\n"), std::string::npos);
  EXPECT_NE(r.out.find("0.3 I yes"), std::string::npos);

  const auto j = nlohmann::json::parse(run({"thresholds", "--d", "3", "--delta", "0.3", "--beta", "0.45", "--format", "json"}).out);
  EXPECT_DOUBLE_EQ(j["delta_star"].get<double>(), 0.5);
  EXPECT_EQ(j["regions"][0]["region"], "II");
}

TEST(Cli, DetectCsv) {
  const auto r = run({"detect", "--statistic", "edge-count", "--n", "400", "--d", "3", "--delta", "0.3",
                      "--alpha", "1", "--beta", "0.5", "--trials", "20", "--seed", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# command: detect\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nn,d,delta,alpha,beta,s,p,q,trials"), std::string::npos);
  const auto t2 = run({"detect", "--statistic", "edge-count", "--n", "400", "--d", "3", "--delta", "0.3",
                       "--alpha", "1", "--beta", "0.5", "--trials", "20", "--seed", "1", "--threads", "3"});
  EXPECT_EQ(t2.out, r.out);
}

TEST(Cli, DetectJsonWithDirectRates) {
  const auto r = run({"detect", "--n", "100", "--d", "3", "--s", "0.001", "--p", "0.9", "--q", "0.05",
                      "--trials", "5", "--seed", "2", "--format", "json", "--verbose"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["config"]["s"].get<double>(), 0.001);
  EXPECT_EQ(j["result"]["cells"][0]["records"].size(), 5u);
}

TEST(Cli, ReconstructTrials) {
  const auto r = run({"reconstruct", "--n", "200", "--d", "3", "--delta", "0.3", "--beta", "0.3",
                      "--trials", "4", "--seed", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mean_norm_error\n200,3,0.3,1,0.3,"), std::string::npos);
  EXPECT_EQ(run({"reconstruct", "--n", "200", "--delta", "0.3"}).code, 1);
}

TEST(Cli, OracleScalarsAndFixture) {
  const auto tv = nlohmann::json::parse(
      run({"oracle", "--n", "4", "--d", "3", "--s", "0.5", "--p", "1", "--q", "0", "--quantity", "tv"}).out);
  EXPECT_NEAR(tv["tv"].get<double>(), 0.9375, 1e-12);

  const auto fx = nlohmann::json::parse(
      run({"oracle", "--n", "4", "--d", "3", "--s", "0.3", "--p", "0.8", "--q", "0.1"}).out);
  EXPECT_EQ(fx["support_encoding"].size(), 64u);
  EXPECT_EQ(fx["params"]["n"], 4);

  const auto big = run({"oracle", "--n", "9", "--d", "3", "--delta", "0.3", "--quantity", "tv"});
  EXPECT_EQ(big.code, 2);
  EXPECT_EQ(nlohmann::json::parse(big.out)["error"]["kind"], "BudgetExceeded");
}

TEST(Cli, SweepDeterministicAcrossThreads) {
  const std::vector<std::string> base{"sweep", "--n", "80,120", "--delta", "0.3,0.5", "--alpha", "1",
                                      "--beta", "0.2,0.7", "--trials", "5", "--seed", "4"};
  auto with = [&](const char* t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    return run(args);
  };
  const auto a = with("1"), b = with("4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  auto no_alpha = base;
  no_alpha.erase(no_alpha.begin() + 5, no_alpha.begin() + 7);
  EXPECT_EQ(run(no_alpha).out, a.out);
}
