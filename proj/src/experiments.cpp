#include "hyperproj/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "hyperproj/error.hpp"
#include "hyperproj/rng.hpp"

namespace hyperproj {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::uint64_t bits(double x) { return std::bit_cast<std::uint64_t>(x); }

// Shared trial counter; the only mutable state touched by sweep workers.
class BudgetLimiter {
 public:
  explicit BudgetLimiter(std::uint64_t cap) : cap_(cap) {}
  bool try_acquire() { return used_.fetch_add(1, std::memory_order_relaxed) < cap_; }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

struct CellSpec {
  Vertex n;
  double delta, alpha, beta;
};

std::vector<CellSpec> expand_grid(const SweepGrid& g,
                                  std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  const std::map<std::string, std::vector<double>> values{
      {"n", std::vector<double>(g.n.begin(), g.n.end())},
      {"delta", g.delta},
      {"alpha", g.alpha},
      {"beta", g.beta}};
  auto order = g.axis_order;
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::string>{"alpha", "beta", "delta", "n"})
    throw InvalidParams("axis order must be a permutation of n, delta, alpha, beta");
  for (const auto& name : order) {
    if (values.at(name).empty()) throw InvalidParams("sweep axis '" + name + "' is empty");
    axes.emplace_back(name, values.at(name));
  }

  std::vector<CellSpec> cells;
  std::vector<std::size_t> idx(order.size(), 0);
  while (true) {
    std::map<std::string, double> at;
    for (std::size_t a = 0; a < order.size(); ++a) at[order[a]] = axes[a].second[idx[a]];
    cells.push_back({static_cast<Vertex>(at["n"]), at["delta"], at["alpha"], at["beta"]});
    std::size_t a = order.size();
    while (a > 0) {
      --a;
      if (++idx[a] < axes[a].second.size()) break;
      idx[a] = 0;
      if (a == 0) return cells;
    }
  }
}

void write_field(std::ostringstream& out, bool applies, double value) {
  if (applies) out << format_double(value);
}

nlohmann::ordered_json params_json(const ModelParams& p) {
  return {{"n", p.n()},         {"d", p.d()},         {"delta", p.delta()}, {"alpha", p.alpha()},
          {"beta", p.beta()},   {"c_s", p.c_s()},     {"c_p", p.c_p()},     {"c_q", p.c_q()},
          {"s", p.s()},         {"p", p.p()},         {"q", p.q()}};
}

nlohmann::ordered_json record_json(const TrialRecord& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["kind"] = r.kind == TrialKind::Detection ? "detection" : "reconstruction";
  j["planted_stat"] = r.planted_stat;
  j["null_stat"] = r.null_stat;
  j["threshold"] = r.threshold;
  j["planted_decision"] = std::string(to_string(r.planted_decision));
  j["null_decision"] = std::string(to_string(r.null_decision));
  if (r.recon) {
    j["recon"] = {{"sym_diff", r.recon->sym_diff},
                  {"missed", r.recon->missed},
                  {"false_pos", r.recon->false_pos},
                  {"normalizer", r.recon->normalizer},
                  {"normalized_error", r.recon->normalized_error}};
  }
  j["failed"] = r.failed;
  if (r.failed) j["failure"] = r.failure;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

TrialRecord run_detection_trial(const ModelParams& params, DetectionStatistic statistic,
                                std::uint64_t seed, ThresholdRule rule) {
  const auto start = Clock::now();
  TrialRecord r;
  r.params = params;
  r.seed = seed;
  r.kind = TrialKind::Detection;

  const auto planted = sample_planted(params, derive_seed(seed, {stream_tag("planted")}));
  const auto null_seed = derive_seed(seed, {stream_tag("null")});
  if (statistic == DetectionStatistic::EdgeCount) {
    const auto null_graph = sample_null(params.n(), params.q(), null_seed);
    r.threshold = edge_count_threshold(params, rule);
    r.planted_stat = static_cast<double>(edge_count(planted.observed));
    r.null_stat = static_cast<double>(edge_count(null_graph));
  } else {
    const auto null_graph = sample_null(params.n(), matched_null_density(params).density, null_seed);
    r.threshold = clique_count_threshold(params);
    r.planted_stat = static_cast<double>(clique_count(planted.observed, params.d()));
    r.null_stat = static_cast<double>(clique_count(null_graph, params.d()));
  }
  r.planted_decision = decide(r.planted_stat, r.threshold);
  r.null_decision = decide(r.null_stat, r.threshold);
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

TrialRecord run_reconstruction_trial(const ModelParams& params, std::uint64_t seed,
                                     std::uint64_t clique_budget) {
  const auto start = Clock::now();
  TrialRecord r;
  r.params = params;
  r.seed = seed;
  r.kind = TrialKind::Reconstruction;
  const auto planted = sample_planted(params, derive_seed(seed, {stream_tag("planted")}));
  try {
    const auto estimate = clique_estimator(planted.observed, params.d(), clique_budget);
    r.planted_stat = static_cast<double>(estimate.size());
    r.recon = recon_metrics(planted.hypergraph, estimate, params.s());
  } catch (const CliqueBudgetExceeded& e) {
    r.failed = true;
    r.failure = e.what();
  }
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

Interval wilson_interval(std::uint64_t k, std::uint64_t m, double z) {
  if (m == 0) return {0.0, 1.0};
  const double n = static_cast<double>(m);
  const double phat = static_cast<double>(k) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  return {k == 0 ? 0.0 : std::max(0.0, center - half), k == m ? 1.0 : std::min(1.0, center + half)};
}

std::string_view to_string(SweepMode m) {
  switch (m) {
    case SweepMode::EdgeCount: return "edge-count";
    case SweepMode::CliqueCountMatchedNull: return "clique-count";
    case SweepMode::Reconstruction: return "reconstruction";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t master_seed, const ModelParams& params, std::uint64_t trial) {
  const std::uint64_t cell = derive_seed(
      params.n(), {static_cast<std::uint64_t>(params.d()), bits(params.s()), bits(params.p()),
                   bits(params.q())});
  return derive_seed(master_seed, {cell, trial});
}

SweepResult sweep(const SweepConfig& config) {
  if (config.trials == 0) throw InvalidParams("sweep needs at least one trial per cell");
  SweepResult result;
  result.mode = config.mode;
  result.master_seed = config.master_seed;
  result.d = config.grid.d;
  const auto specs = expand_grid(config.grid, result.axes);

  const std::uint64_t total = specs.size() * config.trials;
  if (specs.size() > config.max_total_trials / config.trials)
    throw BudgetExceeded("sweep of " + std::to_string(total) + " trials exceeds the cap of " +
                         std::to_string(config.max_total_trials));

  const auto& g = config.grid;
  result.cells.resize(specs.size());
  for (std::size_t c = 0; c < specs.size(); ++c) {
    auto& cell = result.cells[c];
    cell.n = specs[c].n;
    cell.delta = specs[c].delta;
    cell.alpha = specs[c].alpha;
    cell.beta = specs[c].beta;
    cell.trials = config.trials;
    try {
      cell.params = ModelParams::from_exponents(cell.n, g.d, cell.delta, cell.alpha, cell.beta,
                                                g.c_s, g.c_p, g.c_q);
    } catch (const InvalidParams& e) {
      cell.failed = config.trials;
      cell.failure = e.what();
    }
  }

  std::vector<TrialRecord> records(total);
  std::atomic<std::uint64_t> next{0};
  BudgetLimiter limiter(config.max_total_trials);

  auto worker = [&] {
    while (true) {
      const std::uint64_t task = next.fetch_add(1);
      if (task >= total) return;
      const auto& cell = result.cells[task / config.trials];
      auto& rec = records[task];
      if (!cell.params) {
        rec.failed = true;
        continue;
      }
      if (!limiter.try_acquire()) {
        rec.failed = true;
        rec.failure = "global trial budget exhausted";
        continue;
      }
      const auto seed = trial_seed(config.master_seed, *cell.params, task % config.trials);
      try {
        switch (config.mode) {
          case SweepMode::EdgeCount:
            rec = run_detection_trial(*cell.params, DetectionStatistic::EdgeCount, seed, config.rule);
            break;
          case SweepMode::CliqueCountMatchedNull:
            rec = run_detection_trial(*cell.params, DetectionStatistic::CliqueCountMatchedNull, seed,
                                      config.rule);
            break;
          case SweepMode::Reconstruction:
            rec = run_reconstruction_trial(*cell.params, seed, config.clique_budget);
            break;
        }
      } catch (const Error& e) {
        rec.params = *cell.params;
        rec.seed = seed;
        rec.failed = true;
        rec.failure = e.what();
      }
    }
  };

  const unsigned workers = std::max(1u, config.threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Aggregation runs in trial order, so the result does not depend on scheduling.
  for (std::size_t c = 0; c < result.cells.size(); ++c) {
    auto& cell = result.cells[c];
    if (!cell.params) continue;
    std::uint64_t misses = 0, alarms = 0;
    double err_sum = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      auto& rec = records[c * config.trials + t];
      if (rec.failed) {
        ++cell.failed;
        if (cell.failure.empty()) cell.failure = rec.failure;
      } else {
        ++cell.completed;
        if (rec.kind == TrialKind::Detection) {
          misses += rec.planted_decision == Decision::Null;
          alarms += rec.null_decision == Decision::Planted;
        } else if (rec.recon) {
          err_sum += rec.recon->normalized_error;
        }
      }
      if (config.keep_records) cell.records.push_back(std::move(rec));
    }
    if (cell.completed == 0) continue;
    const double m = static_cast<double>(cell.completed);
    cell.miss_rate = static_cast<double>(misses) / m;
    cell.false_alarm_rate = static_cast<double>(alarms) / m;
    cell.error_rate = cell.miss_rate + cell.false_alarm_rate;
    const auto miss_ci = wilson_interval(misses, cell.completed);
    const auto alarm_ci = wilson_interval(alarms, cell.completed);
    cell.error_ci = {std::max(0.0, miss_ci.lo + alarm_ci.lo), std::min(2.0, miss_ci.hi + alarm_ci.hi)};
    cell.mean_norm_error = err_sum / m;
  }
  return result;
}

std::string to_csv(const SweepResult& result, const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  for (const auto& c : header_comments) out << "# " << c << '\n';
  const bool detection = result.mode != SweepMode::Reconstruction;
  out << "n,d,delta,alpha,beta,s,p,q,trials,completed,failed,miss_rate,false_alarm_rate,"
         "error_rate,ci_lo,ci_hi,mean_norm_error\n";
  for (const auto& cell : result.cells) {
    const bool ok = cell.params.has_value();
    const bool have = ok && cell.completed > 0;
    out << cell.n << ',' << result.d << ',' << format_double(cell.delta) << ','
        << format_double(cell.alpha) << ',' << format_double(cell.beta) << ',';
    write_field(out, ok, ok ? cell.params->s() : 0);
    out << ',';
    write_field(out, ok, ok ? cell.params->p() : 0);
    out << ',';
    write_field(out, ok, ok ? cell.params->q() : 0);
    out << ',' << cell.trials << ',' << cell.completed << ',' << cell.failed << ',';
    write_field(out, have && detection, cell.miss_rate);
    out << ',';
    write_field(out, have && detection, cell.false_alarm_rate);
    out << ',';
    write_field(out, have && detection, cell.error_rate);
    out << ',';
    write_field(out, have && detection, cell.error_ci.lo);
    out << ',';
    write_field(out, have && detection, cell.error_ci.hi);
    out << ',';
    write_field(out, have && !detection, cell.mean_norm_error);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const SweepResult& result, bool verbose) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(result.mode));
  j["master_seed"] = result.master_seed;
  j["d"] = result.d;
  auto& axes = j["axes"];
  axes = nlohmann::ordered_json::object();
  for (const auto& [name, values] : result.axes) axes[name] = values;
  auto& cells = j["cells"];
  cells = nlohmann::ordered_json::array();
  const bool detection = result.mode != SweepMode::Reconstruction;
  for (const auto& cell : result.cells) {
    nlohmann::ordered_json c;
    if (cell.params) {
      c["params"] = params_json(*cell.params);
    } else {
      c["params"] = {{"n", cell.n}, {"delta", cell.delta}, {"alpha", cell.alpha}, {"beta", cell.beta}};
    }
    c["trials"] = cell.trials;
    c["completed"] = cell.completed;
    c["failed"] = cell.failed;
    if (!cell.failure.empty()) c["failure"] = cell.failure;
    if (cell.completed > 0) {
      if (detection) {
        c["miss_rate"] = cell.miss_rate;
        c["false_alarm_rate"] = cell.false_alarm_rate;
        c["error_rate"] = cell.error_rate;
        c["ci_lo"] = cell.error_ci.lo;
        c["ci_hi"] = cell.error_ci.hi;
      } else {
        c["mean_norm_error"] = cell.mean_norm_error;
      }
    }
    if (verbose) {
      auto& recs = c["records"];
      recs = nlohmann::ordered_json::array();
      for (const auto& r : cell.records) recs.push_back(record_json(r));
    }
    cells.push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace hyperproj
