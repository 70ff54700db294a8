#pragma once

// Seeded Monte Carlo trials and parameter-grid sweeps.
//
// Seeds: a trial seed is derived from (master seed, cell key, trial index),
// where the cell key hashes the cell's parameter values. The planted draw,
// the null draw and any further streams inside a trial are derived from the
// trial seed with distinct tags, so cells and trials can run in any order or
// on any number of workers with identical results.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperproj/model.hpp"
#include "hyperproj/reconstruct.hpp"
#include "hyperproj/stats.hpp"

namespace hyperproj {

enum class DetectionStatistic {
  EdgeCount,               // f(A) against Erdos-Renyi(q)
  CliqueCountMatchedNull,  // g(A) against Erdos-Renyi(q~)
};

enum class TrialKind { Detection, Reconstruction };

struct TrialRecord {
  ModelParams params;
  std::uint64_t seed = 0;
  TrialKind kind = TrialKind::Detection;
  double planted_stat = 0;  // reconstruction trials: |Ĥ|
  double null_stat = 0;
  double threshold = 0;
  Decision planted_decision = Decision::Null;
  Decision null_decision = Decision::Null;
  std::optional<ReconMetrics> recon;
  bool failed = false;
  std::string failure;
  std::int64_t wall_time_ms = 0;  // not part of the reproducible content
};

TrialRecord run_detection_trial(const ModelParams& params, DetectionStatistic statistic,
                                std::uint64_t seed, ThresholdRule rule = ThresholdRule::Paper);

// CliqueBudgetExceeded is caught and recorded as a failed trial.
TrialRecord run_reconstruction_trial(const ModelParams& params, std::uint64_t seed,
                                     std::uint64_t clique_budget = kDefaultCliqueBudget);

struct Interval {
  double lo = 0;
  double hi = 0;
};

// Wilson score interval for k successes in m trials (95% by default).
Interval wilson_interval(std::uint64_t k, std::uint64_t m, double z = 1.959963984540054);

enum class SweepMode { EdgeCount, CliqueCountMatchedNull, Reconstruction };

std::string_view to_string(SweepMode m);

struct SweepGrid {
  int d = 3;
  std::vector<Vertex> n;
  std::vector<double> delta;
  std::vector<double> alpha;
  std::vector<double> beta;
  double c_s = 1.0, c_p = 1.0, c_q = 1.0;
  // Nesting of the cell loop, outermost first; any permutation of
  // {"n", "delta", "alpha", "beta"}.
  std::vector<std::string> axis_order{"n", "delta", "alpha", "beta"};
};

struct SweepConfig {
  SweepGrid grid;
  std::uint64_t trials = 1;
  SweepMode mode = SweepMode::EdgeCount;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
  std::uint64_t max_total_trials = 1'000'000;
  std::uint64_t clique_budget = kDefaultCliqueBudget;
  ThresholdRule rule = ThresholdRule::Paper;
  bool keep_records = false;
};

struct CellResult {
  Vertex n = 0;
  double delta = 0, alpha = 0, beta = 0;
  std::optional<ModelParams> params;  // empty when the point is invalid
  std::uint64_t trials = 0;           // configured
  std::uint64_t completed = 0;
  std::uint64_t failed = 0;
  std::string failure;  // first failure message, if any
  // detection modes
  double miss_rate = 0;         // P̂(decide null | planted)
  double false_alarm_rate = 0;  // Q̂(decide planted | null)
  double error_rate = 0;        // miss + false alarm, in [0, 2]
  Interval error_ci;            // sum of the two Wilson intervals, clipped to [0, 2]
  // reconstruction mode
  double mean_norm_error = 0;
  std::vector<TrialRecord> records;  // filled when keep_records
};

struct SweepResult {
  SweepMode mode = SweepMode::EdgeCount;
  std::uint64_t master_seed = 0;
  int d = 3;
  std::vector<std::pair<std::string, std::vector<double>>> axes;
  std::vector<CellResult> cells;
};

// Throws BudgetExceeded when cells * trials exceeds max_total_trials.
SweepResult sweep(const SweepConfig& config);

// Seed of trial `trial` in the cell with these parameters.
std::uint64_t trial_seed(std::uint64_t master_seed, const ModelParams& params, std::uint64_t trial);

// One row per cell: axes, resolved rates, trials, error_rate, ci_lo, ci_hi,
// mean_norm_error. Fields that do not apply to the mode are left empty.
std::string to_csv(const SweepResult& result, const std::vector<std::string>& header_comments = {});
// Aggregates, plus per-trial records when verbose.
std::string to_json(const SweepResult& result, bool verbose);

// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace hyperproj
