#include "hyperproj/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hyperproj/error.hpp"
#include "hyperproj/experiments.hpp"
#include "hyperproj/io.hpp"
#include "hyperproj/model.hpp"
#include "hyperproj/oracle.hpp"
#include "hyperproj/reconstruct.hpp"
#include "hyperproj/stats.hpp"
#include "hyperproj/thresholds.hpp"

#ifndef HYPERPROJ_VERSION
#define HYPERPROJ_VERSION "0.0.0"
#endif

namespace hyperproj {

std::string_view version() { return HYPERPROJ_VERSION; }

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct ModelOptions {
  Vertex n = 0;
  int d = 3;
  std::optional<double> delta;
  double alpha = 1.0;
  double beta = 0.0;
  double c_s = 1.0, c_p = 1.0, c_q = 1.0;
  std::optional<double> s, p, q;
};

void add_model_options(CLI::App* app, ModelOptions& m, bool need_n = true) {
  auto* n = app->add_option("--n", m.n, "vertex count");
  if (need_n) n->required();
  app->add_option("--d", m.d, "hyperedge arity (2..6)")->capture_default_str();
  app->add_option("--delta", m.delta, "hypergraph density exponent");
  app->add_option("--alpha", m.alpha, "retention exponent, p = c_p n^(-1+alpha)")->capture_default_str();
  app->add_option("--beta", m.beta, "background exponent, q = c_q n^(-1+beta)")->capture_default_str();
  app->add_option("--c-s", m.c_s, "prefactor of s")->capture_default_str();
  app->add_option("--c-p", m.c_p, "prefactor of p")->capture_default_str();
  app->add_option("--c-q", m.c_q, "prefactor of q")->capture_default_str();
  app->add_option("--s", m.s, "hyperedge probability (overrides --delta)");
  app->add_option("--p", m.p, "retention probability (overrides --alpha)");
  app->add_option("--q", m.q, "background probability (overrides --beta)");
}

ModelParams resolve(const ModelOptions& m, std::ostream& err) {
  const bool direct = m.s || m.p || m.q;
  if (!m.delta && !m.s) throw InvalidParams("one of --delta or --s is required");
  if (!direct) return ModelParams::from_exponents(m.n, m.d, *m.delta, m.alpha, m.beta, m.c_s, m.c_p, m.c_q);

  err << "notice: direct rate flags override the corresponding exponent flags\n";
  const double nn = m.n;
  const double s = m.s ? *m.s : std::min(1.0, m.c_s * std::pow(nn, -(m.d - 1) + *m.delta));
  const double p = m.p ? *m.p : std::min(1.0, m.c_p * std::pow(nn, -1.0 + m.alpha));
  const double q = m.q ? *m.q : std::min(1.0, m.c_q * std::pow(nn, -1.0 + m.beta));
  return ModelParams::from_rates(m.n, m.d, s, p, q);
}

std::vector<std::string> config_lines(std::string_view command, const ModelParams& params,
                                      std::optional<std::uint64_t> seed) {
  std::vector<std::string> lines;
  lines.push_back("hyperproj " + std::string(version()));
  lines.push_back("command: " + std::string(command));
  lines.push_back("n: " + std::to_string(params.n()));
  lines.push_back("d: " + std::to_string(params.d()));
  lines.push_back("delta: " + format_double(params.delta()));
  lines.push_back("alpha: " + format_double(params.alpha()));
  lines.push_back("beta: " + format_double(params.beta()));
  if (!params.rates_given()) {
    lines.push_back("c_s: " + format_double(params.c_s()));
    lines.push_back("c_p: " + format_double(params.c_p()));
    lines.push_back("c_q: " + format_double(params.c_q()));
  }
  lines.push_back("s: " + format_double(params.s()));
  lines.push_back("p: " + format_double(params.p()));
  lines.push_back("q: " + format_double(params.q()));
  if (seed) lines.push_back("seed: " + std::to_string(*seed));
  return lines;
}

Json config_json(std::string_view command, const ModelParams& params,
                 std::optional<std::uint64_t> seed) {
  Json j;
  j["version"] = std::string(version());
  j["command"] = std::string(command);
  j["n"] = params.n();
  j["d"] = params.d();
  j["delta"] = params.delta();
  j["alpha"] = params.alpha();
  j["beta"] = params.beta();
  if (!params.rates_given()) {
    j["c_s"] = params.c_s();
    j["c_p"] = params.c_p();
    j["c_q"] = params.c_q();
  }
  j["s"] = params.s();
  j["p"] = params.p();
  j["q"] = params.q();
  if (seed) j["seed"] = *seed;
  return j;
}

// Leading '#' lines of a file, without the marker.
std::vector<std::string> read_comments(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line) && !line.empty() && line.front() == '#')
    out.push_back(line.size() > 2 ? line.substr(2) : "");
  return out;
}

// Writes to `path`, or to `out` when path is empty or "-".
template <class Write>
void emit(const std::string& path, std::ostream& out, Write&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  write(file);
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const InvalidParams*>(&e)) return "InvalidParams";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "BudgetExceeded";
  if (dynamic_cast<const CliqueBudgetExceeded*>(&e)) return "CliqueBudgetExceeded";
  if (dynamic_cast<const DegenerateNoise*>(&e)) return "DegenerateNoise";
  if (dynamic_cast<const ZeroEvidence*>(&e)) return "ZeroEvidence";
  if (dynamic_cast<const Overflow*>(&e)) return "Overflow";
  if (dynamic_cast<const UnsupportedRegime*>(&e)) return "UnsupportedRegime";
  if (dynamic_cast<const UnsupportedArity*>(&e)) return "UnsupportedArity";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  return "RuntimeError";
}

void write_sweep(const SweepResult& result, Format format, bool verbose, const std::string& command,
                 const ModelParams* params, std::uint64_t seed, std::ostream& out) {
  if (format == Format::Json) {
    Json j;
    if (params) j["config"] = config_json(command, *params, seed);
    j["result"] = Json::parse(to_json(result, verbose));
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::string> header;
    if (params) {
      header = config_lines(command, *params, seed);
    } else {
      header = {"hyperproj " + std::string(version()), "command: " + command,
                "seed: " + std::to_string(seed)};
    }
    out << to_csv(result, header);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulation and exact inference for noisy hypergraph projections", "hyperproj"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hyperproj " + std::string(version()));

  std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

  // sample
  ModelOptions sample_m;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "draw a hypergraph H");
  add_model_options(sample, sample_m);
  sample->add_option("--seed", sample_seed, "random seed")->required();
  sample->add_option("-o,--output", sample_out, "output file (default stdout)");

  // project
  std::string project_in, project_out;
  auto* proj = app.add_subcommand("project", "projection graph P(H) of a hypergraph file");
  proj->add_option("-i,--input", project_in, "hypergraph file")->required();
  proj->add_option("-o,--output", project_out, "output file (default stdout)");

  // noise
  std::string noise_in, noise_out;
  std::optional<double> noise_p, noise_q;
  double noise_alpha = 1.0, noise_beta = 0.0, noise_cp = 1.0, noise_cq = 1.0;
  std::uint64_t noise_seed = 0;
  auto* noise = app.add_subcommand("noise", "noisy observation A of a projection graph file");
  noise->add_option("-i,--input", noise_in, "graph file")->required();
  noise->add_option("-o,--output", noise_out, "output file (default stdout)");
  noise->add_option("--p", noise_p, "retention probability");
  noise->add_option("--q", noise_q, "background probability");
  noise->add_option("--alpha", noise_alpha, "retention exponent")->capture_default_str();
  noise->add_option("--beta", noise_beta, "background exponent")->capture_default_str();
  noise->add_option("--c-p", noise_cp, "prefactor of p")->capture_default_str();
  noise->add_option("--c-q", noise_cq, "prefactor of q")->capture_default_str();
  noise->add_option("--seed", noise_seed, "random seed")->required();

  // detect
  ModelOptions detect_m;
  std::string detect_stat = "edge-count", detect_rule = "paper";
  std::uint64_t detect_trials = 100, detect_seed = 0;
  unsigned detect_threads = 1;
  Format detect_format = Format::Csv;
  bool detect_verbose = false;
  auto* detect = app.add_subcommand("detect", "paired planted/null detection trials");
  add_model_options(detect, detect_m);
  detect->add_option("--statistic", detect_stat, "edge-count or clique-count")
      ->check(CLI::IsMember({"edge-count", "clique-count"}))
      ->capture_default_str();
  detect->add_option("--threshold-rule", detect_rule, "paper or calibrated (edge-count only)")
      ->check(CLI::IsMember({"paper", "calibrated"}))
      ->capture_default_str();
  detect->add_option("--trials", detect_trials, "paired trials")->capture_default_str();
  detect->add_option("--seed", detect_seed, "master seed")->required();
  detect->add_option("--threads", detect_threads, "worker threads")->capture_default_str();
  detect->add_option("--format", detect_format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
  detect->add_flag("--verbose", detect_verbose, "include per-trial records (json)");

  // reconstruct
  ModelOptions recon_m;
  std::string recon_in, recon_out;
  int recon_d = 3;
  std::uint64_t recon_trials = 20, recon_seed = 0, recon_budget = kDefaultCliqueBudget;
  unsigned recon_threads = 1;
  Format recon_format = Format::Csv;
  bool recon_verbose = false;
  auto* recon = app.add_subcommand(
      "reconstruct", "clique estimator on a graph file (-i), or Monte Carlo trials with --seed");
  recon->add_option("-i,--input", recon_in, "observed graph file");
  recon->add_option("-o,--output", recon_out, "output file (default stdout)");
  recon->add_option("--arity", recon_d, "clique size for -i mode")->capture_default_str();
  add_model_options(recon, recon_m, false);
  recon->add_option("--trials", recon_trials, "trials")->capture_default_str();
  auto* recon_seed_opt = recon->add_option("--seed", recon_seed, "master seed");
  recon->add_option("--budget", recon_budget, "maximum cliques per estimate")->capture_default_str();
  recon->add_option("--threads", recon_threads, "worker threads")->capture_default_str();
  recon->add_option("--format", recon_format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
  recon->add_flag("--verbose", recon_verbose, "include per-trial records (json)");

  // thresholds
  int thr_d = 3;
  double thr_delta = 0, thr_alpha = 1.0;
  std::optional<double> thr_beta;
  Format thr_format = Format::Text;
  auto* thr = app.add_subcommand("thresholds", "phase boundaries and region table");
  thr->add_option("--d", thr_d, "hyperedge arity")->required();
  thr->add_option("--delta", thr_delta, "density exponent")->required();
  thr->add_option("--alpha", thr_alpha, "retention exponent")->capture_default_str();
  thr->add_option("--beta", thr_beta, "classify this background exponent");
  thr->add_option("--format", thr_format, "text or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));

  // oracle
  ModelOptions oracle_m;
  std::string oracle_quantity = "marginal", oracle_graph, oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exact enumeration at tiny n (JSON output)");
  add_model_options(oracle, oracle_m);
  oracle->add_option("--quantity", oracle_quantity,
                     "marginal, null, posterior, likelihood, tv or second-moment")
      ->check(CLI::IsMember({"marginal", "null", "posterior", "likelihood", "tv", "second-moment"}))
      ->capture_default_str();
  oracle->add_option("--graph", oracle_graph, "observed graph file (posterior, likelihood)");
  oracle->add_option("-o,--output", oracle_out, "output file (default stdout)");

  // sweep
  SweepConfig sw;
  sw.grid.alpha = {1.0};
  std::vector<double> sw_n;
  std::string sw_stat = "edge-count", sw_rule = "paper";
  Format sw_format = Format::Csv;
  bool sw_verbose = false;
  std::string sw_out;
  auto* swc = app.add_subcommand("sweep", "grid of cells over n, delta, alpha, beta");
  swc->add_option("--d", sw.grid.d, "hyperedge arity")->capture_default_str();
  swc->add_option("--n", sw_n, "vertex counts")->required()->delimiter(',');
  swc->add_option("--delta", sw.grid.delta, "density exponents")->required()->delimiter(',');
  swc->add_option("--alpha", sw.grid.alpha, "retention exponents (default 1)")->delimiter(',');
  swc->add_option("--beta", sw.grid.beta, "background exponents")->required()->delimiter(',');
  swc->add_option("--c-s", sw.grid.c_s, "prefactor of s")->capture_default_str();
  swc->add_option("--c-p", sw.grid.c_p, "prefactor of p")->capture_default_str();
  swc->add_option("--c-q", sw.grid.c_q, "prefactor of q")->capture_default_str();
  swc->add_option("--axis-order", sw.grid.axis_order, "loop nesting, outermost first")->delimiter(',');
  swc->add_option("--trials", sw.trials, "trials per cell")->required();
  swc->add_option("--seed", sw.master_seed, "master seed")->required();
  swc->add_option("--threads", sw.threads, "worker threads")->capture_default_str();
  swc->add_option("--max-trials", sw.max_total_trials, "cap on cells x trials")->capture_default_str();
  swc->add_option("--budget", sw.clique_budget, "maximum cliques per estimate")->capture_default_str();
  swc->add_option("--statistic", sw_stat, "edge-count, clique-count or reconstruction")
      ->check(CLI::IsMember({"edge-count", "clique-count", "reconstruction"}))
      ->capture_default_str();
  swc->add_option("--threshold-rule", sw_rule, "paper or calibrated")
      ->check(CLI::IsMember({"paper", "calibrated"}))
      ->capture_default_str();
  swc->add_option("--format", sw_format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
  swc->add_flag("--verbose", sw_verbose, "include per-trial records (json)");
  swc->add_option("-o,--output", sw_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  bool json_errors = false;
  try {
    if (sample->parsed()) {
      const auto params = resolve(sample_m, err);
      const auto h = sample_hypergraph(params, sample_seed);
      emit(sample_out, out, [&](std::ostream& o) {
        write_hypergraph(o, h, config_lines("sample", params, sample_seed));
      });
    } else if (proj->parsed()) {
      const auto h = read_hypergraph_file(project_in);
      auto comments = read_comments(project_in);
      comments.push_back("command: project");
      emit(project_out, out, [&](std::ostream& o) { write_graph(o, project(h), comments); });
    } else if (noise->parsed()) {
      const auto g = read_graph_file(noise_in);
      const double nn = g.n();
      if ((noise_p || noise_q) && !(noise_p && noise_q))
        err << "notice: direct rate flags override the corresponding exponent flags\n";
      const double p = noise_p ? *noise_p : std::min(1.0, noise_cp * std::pow(nn, -1.0 + noise_alpha));
      const double q = noise_q ? *noise_q : std::min(1.0, noise_cq * std::pow(nn, -1.0 + noise_beta));
      const auto a = apply_noise(g, p, q, noise_seed);
      auto comments = read_comments(noise_in);
      comments.push_back("command: noise");
      comments.push_back("noise_p: " + format_double(p));
      comments.push_back("noise_q: " + format_double(q));
      comments.push_back("noise_seed: " + std::to_string(noise_seed));
      emit(noise_out, out, [&](std::ostream& o) { write_graph(o, a, comments); });
    } else if (detect->parsed()) {
      json_errors = detect_format == Format::Json;
      const auto params = resolve(detect_m, err);
      SweepConfig cfg;
      cfg.grid.d = params.d();
      cfg.grid.n = {params.n()};
      cfg.trials = detect_trials;
      cfg.master_seed = detect_seed;
      cfg.threads = detect_threads;
      cfg.keep_records = detect_verbose;
      cfg.rule = detect_rule == "paper" ? ThresholdRule::Paper : ThresholdRule::Calibrated;
      cfg.mode = detect_stat == "edge-count" ? SweepMode::EdgeCount : SweepMode::CliqueCountMatchedNull;
      if (params.rates_given()) {
        // A direct-rate cell is not expressible as an exponent grid; run it in place.
        SweepResult result;
        result.mode = cfg.mode;
        result.master_seed = detect_seed;
        result.d = params.d();
        CellResult cell;
        cell.n = params.n();
        cell.delta = params.delta();
        cell.alpha = params.alpha();
        cell.beta = params.beta();
        cell.params = params;
        cell.trials = detect_trials;
        std::uint64_t misses = 0, alarms = 0;
        for (std::uint64_t t = 0; t < detect_trials; ++t) {
          auto rec = run_detection_trial(
              params,
              cfg.mode == SweepMode::EdgeCount ? DetectionStatistic::EdgeCount
                                               : DetectionStatistic::CliqueCountMatchedNull,
              trial_seed(detect_seed, params, t), cfg.rule);
          ++cell.completed;
          misses += rec.planted_decision == Decision::Null;
          alarms += rec.null_decision == Decision::Planted;
          if (detect_verbose) cell.records.push_back(std::move(rec));
        }
        const double m = static_cast<double>(cell.completed);
        cell.miss_rate = static_cast<double>(misses) / m;
        cell.false_alarm_rate = static_cast<double>(alarms) / m;
        cell.error_rate = cell.miss_rate + cell.false_alarm_rate;
        const auto a = wilson_interval(misses, cell.completed);
        const auto b = wilson_interval(alarms, cell.completed);
        cell.error_ci = {std::max(0.0, a.lo + b.lo), std::min(2.0, a.hi + b.hi)};
        result.axes = {{"n", {static_cast<double>(params.n())}}};
        result.cells.push_back(std::move(cell));
        write_sweep(result, detect_format, detect_verbose, "detect", &params, detect_seed, out);
      } else {
        cfg.grid.delta = {params.delta()};
        cfg.grid.alpha = {params.alpha()};
        cfg.grid.beta = {params.beta()};
        cfg.grid.c_s = params.c_s();
        cfg.grid.c_p = params.c_p();
        cfg.grid.c_q = params.c_q();
        const auto result = sweep(cfg);
        write_sweep(result, detect_format, detect_verbose, "detect", &params, detect_seed, out);
      }
    } else if (recon->parsed()) {
      json_errors = recon_format == Format::Json;
      if (!recon_in.empty()) {
        const auto a = read_graph_file(recon_in);
        const auto est = clique_estimator(a, recon_d, recon_budget);
        auto comments = read_comments(recon_in);
        comments.push_back("command: reconstruct");
        comments.push_back("arity: " + std::to_string(recon_d));
        emit(recon_out, out, [&](std::ostream& o) { write_hypergraph(o, est, comments); });
      } else {
        if (recon_seed_opt->count() == 0) throw InvalidParams("--seed is required for reconstruction trials");
        if (recon_m.n == 0) throw InvalidParams("--n is required for reconstruction trials");
        const auto params = resolve(recon_m, err);
        if (params.rates_given()) throw InvalidParams("reconstruction trials take exponent flags");
        SweepConfig cfg;
        cfg.grid.d = params.d();
        cfg.grid.n = {params.n()};
        cfg.grid.delta = {params.delta()};
        cfg.grid.alpha = {params.alpha()};
        cfg.grid.beta = {params.beta()};
        cfg.grid.c_s = params.c_s();
        cfg.grid.c_p = params.c_p();
        cfg.grid.c_q = params.c_q();
        cfg.trials = recon_trials;
        cfg.master_seed = recon_seed;
        cfg.threads = recon_threads;
        cfg.clique_budget = recon_budget;
        cfg.keep_records = recon_verbose;
        cfg.mode = SweepMode::Reconstruction;
        const auto result = sweep(cfg);
        emit(recon_out, out, [&](std::ostream& o) {
          write_sweep(result, recon_format, recon_verbose, "reconstruct", &params, recon_seed, o);
        });
      }
    } else if (thr->parsed()) {
      json_errors = thr_format == Format::Json;
      const auto rb = reconstruction_boundary(thr_d, thr_delta);
      const double det = detection_boundary(thr_delta, thr_alpha);
      const double limit = matched_null_limit(thr_d);
      std::vector<double> betas;
      for (int k = 1; k <= 9; ++k) betas.push_back(k / 10.0);
      if (thr_beta) betas = {*thr_beta};

      auto region_of = [&](double beta) -> std::string {
        try {
          return std::string(to_string(classify_region(thr_d, thr_delta, beta, thr_alpha)));
        } catch (const Error&) {
          return "n/a";
        }
      };
      auto fp_of = [&](double beta) -> std::optional<FalsePositiveExponent> {
        if (thr_d < 3 || thr_d > 5) return std::nullopt;
        return false_positive_exponent(thr_d, thr_delta, beta);
      };

      if (thr_format == Format::Json) {
        Json j;
        j["config"] = {{"version", std::string(version())}, {"command", "thresholds"},
                       {"d", thr_d}, {"delta", thr_delta}, {"alpha", thr_alpha}};
        j["detection_beta_star"] = det;
        j["delta_star"] = rb.delta_star;
        j["beta_star"] = rb.beta_star;
        j["matched_null_limit"] = limit;
        auto& rows = j["regions"];
        rows = Json::array();
        for (double b : betas) {
          Json row{{"beta", b}, {"region", region_of(b)}, {"edge_count_detects", b < det}};
          if (auto fp = fp_of(b)) {
            row["min_omega"] = fp->min_omega;
            row["clique_estimator_passes"] = fp->passes;
          }
          rows.push_back(row);
        }
        out << j.dump(2) << '\n';
      } else {
        out << "# hyperproj " << version() << "\n# command: thresholds\n";
        out << "# d: " << thr_d << "\n# delta: " << format_double(thr_delta)
            << "\n# alpha: " << format_double(thr_alpha) << '\n';
        out << "detection beta* = 2(delta+alpha)-1 = " << format_double(det) << '\n';
        out << "delta* = (d-1)/(d+1) = " << format_double(rb.delta_star) << '\n';
        out << "beta* = 2 delta/(d(d-1)) + (d-2)/d = " << format_double(rb.beta_star) << '\n';
        out << "matched-null limit = " << format_double(limit) << '\n';
        out << "beta region edge_count_detects min_omega clique_estimator_passes\n";
        for (double b : betas) {
          out << format_double(b) << ' ' << region_of(b) << ' ' << (b < det ? "yes" : "no");
          if (auto fp = fp_of(b)) {
            out << ' ' << format_double(fp->min_omega) << ' ' << (fp->passes ? "yes" : "no");
          } else {
            out << " - -";
          }
          out << '\n';
        }
      }
    } else if (oracle->parsed()) {
      json_errors = true;
      const auto params = resolve(oracle_m, err);
      Json j;
      j["config"] = config_json("oracle", params, std::nullopt);
      j["quantity"] = oracle_quantity;
      auto graph_arg = [&] {
        if (oracle_graph.empty()) throw InvalidParams("--graph is required for this quantity");
        return read_graph_file(oracle_graph);
      };
      if (oracle_quantity == "marginal" || oracle_quantity == "null" || oracle_quantity == "posterior") {
        ExactDistribution dist;
        if (oracle_quantity == "marginal") {
          dist = exact_planted_marginal(params);
        } else if (oracle_quantity == "null") {
          dist = exact_null(params.n(), params.q());
        } else {
          const auto post = exact_posterior(graph_arg(), params);
          dist = post.distribution();
          j["evidence"] = post.evidence();
          j["map_encoding"] = post.map_estimate();
        }
        const auto fixture = Json::parse(oracle_fixture_json(params, dist));
        j["params"] = fixture["params"];
        j["support_encoding"] = fixture["support_encoding"];
        j["probs"] = fixture["probs"];
      } else if (oracle_quantity == "likelihood") {
        j["likelihood_ratio"] = exact_likelihood_ratio(graph_arg(), params);
      } else if (oracle_quantity == "tv") {
        j["tv"] = exact_tv(params);
      } else {
        const auto sm = exact_second_moment(params);
        j["direct"] = sm.direct;
        j["replica"] = sm.replica;
      }
      emit(oracle_out, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    } else if (swc->parsed()) {
      json_errors = sw_format == Format::Json;
      for (double v : sw_n) {
        if (v < 1 || v != std::floor(v)) throw InvalidParams("--n values must be positive integers");
        sw.grid.n.push_back(static_cast<Vertex>(v));
      }
      sw.keep_records = sw_verbose;
      sw.rule = sw_rule == "paper" ? ThresholdRule::Paper : ThresholdRule::Calibrated;
      sw.mode = sw_stat == "edge-count"     ? SweepMode::EdgeCount
                : sw_stat == "clique-count" ? SweepMode::CliqueCountMatchedNull
                                            : SweepMode::Reconstruction;
      const auto result = sweep(sw);
      emit(sw_out, out, [&](std::ostream& o) {
        write_sweep(result, sw_format, sw_verbose, "sweep", nullptr, sw.master_seed, o);
      });
    }
  } catch (const std::exception& e) {
    const bool usage = dynamic_cast<const InvalidParams*>(&e) != nullptr;
    if (json_errors) {
      Json j{{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
      out << j.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return usage ? 1 : 2;
  }
  return 0;
}

}  // namespace hyperproj
