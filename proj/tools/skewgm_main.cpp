// Copyright 2026 The skewgm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// skewgm command-line tool.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewgm/campaign.hpp"
#include "skewgm/evaluate.hpp"
#include "skewgm/export.hpp"
#include "skewgm/io.hpp"
#include "skewgm/parallel.hpp"
#include "skewgm/pipeline.hpp"
#include "skewgm/returns.hpp"
#include "skewgm/simulate.hpp"

namespace {

using namespace skewgm;
using ojson = nlohmann::ordered_json;

struct Common {
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string estimator = "skeptic_tau";
  std::string shrinkage = "glasso";
  double lambda = 0.0;
  CLI::Option* lambda_opt = nullptr;
  std::string out = "-";
  std::string format;
  unsigned threads = 0;
};

// The seed actually used; drawn from entropy and announced when not given.
std::uint64_t resolve_seed(Common& c) {
  if (c.seed_opt->count() == 0) {
    std::random_device rd;
    c.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << c.seed << '\n';
    c.seed_opt->add_result(std::to_string(c.seed));
  }
  return c.seed;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") {
      stream_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw Error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string format_or(const Common& c, const std::string& fallback) {
  return c.format.empty() ? fallback : c.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(std::string(command) + ": unsupported --format '" + format + "'");
}

// ---------------------------------------------------------------- data input

struct DataSource {
  std::string data_path;
  std::string prices_path;

  void add(CLI::App* cmd) {
    auto* d = cmd->add_option("--data", data_path, "Observation CSV (header of labels)");
    auto* p = cmd->add_option("--prices", prices_path,
                              "Price CSV (date column + one column per ticker); log returns are used");
    d->excludes(p);
  }

  DataMatrix load() const {
    if (!data_path.empty()) return read_data_csv(data_path);
    if (!prices_path.empty()) {
      ReturnsPanel panel = ingest_prices(std::filesystem::path(prices_path));
      for (const auto& d : panel.dropped_tickers) {
        std::cerr << "dropped " << d.ticker << ": " << d.reason << '\n';
      }
      return panel.data();
    }
    throw Error("one of --data or --prices is required");
  }
};

struct SimFlags {
  SimulationConfig cfg;

  // Campaigns take lists for --r and --gamma instead.
  void add(CLI::App* cmd, bool with_r_gamma = true) {
    cmd->add_option("--p", cfg.p, "Number of variables")->capture_default_str();
    cmd->add_option("--n", cfg.n, "Number of observations")->capture_default_str();
    cmd->add_option("--sparsity", cfg.sparsity, "Fraction of pairs that are edges")->capture_default_str();
    if (with_r_gamma) {
      cmd->add_option("--r", cfg.contamination_r, "Contamination fraction per column")->capture_default_str();
      cmd->add_option("--gamma", cfg.power_gamma, "Power-transform exponent")->capture_default_str();
    }
    cmd->add_option("--contamination-sd", cfg.contamination_sd, "Std. deviation of replacement draws")
        ->capture_default_str();
    cmd->add_option("--off-diag", cfg.off_diag_value, "Precision off-diagonal value")->capture_default_str();
    cmd->add_option("--diagonal-boost", cfg.diagonal_boost, "Added to |lambda_min| on the diagonal")
        ->capture_default_str();
    cmd->add_flag("--unit-variance,!--raw-variance", cfg.unit_variance,
                  "Rescale the covariance to a correlation matrix");
  }
};

struct StarsFlags {
  int subsamples = 20;
  int subsample_size = 0;
  double beta = 0.05;
  int grid_size = 20;
  double min_ratio = 0.1;
  bool refit_alpha = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--subsamples", subsamples, "StARS subsample count")->capture_default_str();
    cmd->add_option("--subsample-size", subsample_size, "StARS subsample size (0 = default rule)")
        ->capture_default_str();
    cmd->add_option("--beta", beta, "StARS instability threshold")->capture_default_str();
    cmd->add_option("--grid-size", grid_size, "Log-spaced lambda grid size")->capture_default_str();
    cmd->add_option("--min-ratio", min_ratio, "Smallest grid lambda as a fraction of the largest")
        ->capture_default_str();
    cmd->add_flag("--refit-alpha", refit_alpha, "Refit skewness on every subsample");
  }

  StarsSelection selection(std::uint64_t seed) const {
    StarsSelection s;
    s.config.num_subsamples = subsamples;
    s.config.subsample_size = subsample_size;
    s.config.beta_threshold = beta;
    s.config.seed = seed;
    s.grid_size = grid_size;
    s.grid_min_ratio = min_ratio;
    s.refit_alpha = refit_alpha;
    return s;
  }
};

PipelineOptions pipeline_options(const Common& c, const std::string& alpha_method) {
  PipelineOptions opts;
  opts.estimator = estimator_from_string(c.estimator);
  opts.shrinkage = shrinkage_from_string(c.shrinkage);
  if (!alpha_method.empty()) opts.alpha_method = alpha_method_from_string(alpha_method);
  return opts;
}

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson stars_json(const StarsResult& s) {
  ojson curve = ojson::array();
  for (const auto& pt : s.curve) {
    curve.push_back({{"lambda", pt.lambda}, {"instability", pt.instability}, {"monotone", pt.monotone}});
  }
  return {{"lambda_star", s.lambda_star},
          {"index", s.index},
          {"threshold_met", s.threshold_met},
          {"subsample_size", s.subsample_size},
          {"curve", std::move(curve)}};
}

ojson alpha_json(const SkewnessVector& a, const std::vector<std::string>& labels) {
  ojson out = ojson::array();
  for (Index j = 0; j < a.alpha.size(); ++j) {
    ojson e = {{"label", labels[static_cast<std::size_t>(j)]}, {"alpha", a.alpha(j)}};
    if (static_cast<std::size_t>(j) < a.diagnostics.size()) {
      const auto& d = a.diagnostics[static_cast<std::size_t>(j)];
      e["converged"] = d.converged;
      e["clamped"] = d.clamped;
      e["fell_back"] = d.fell_back;
      if (d.dof > 0.0) e["dof"] = d.dof;
    }
    out.push_back(std::move(e));
  }
  return {{"method", std::string(to_string(a.method))}, {"columns", std::move(out)}};
}

// ---------------------------------------------------------------- commands

void cmd_simulate(Common& c, SimFlags& sim, const std::string& truth_path) {
  const std::string format = format_or(c, "csv");
  require_format(format, {"csv", "json"}, "simulate");
  SimulationConfig cfg = sim.cfg;
  cfg.seed = resolve_seed(c);
  const SimulatedDataset ds = simulate_dataset(cfg);
  if (!truth_path.empty()) {
    std::ofstream t(truth_path, std::ios::binary);
    if (!t) throw Error("cannot open '" + truth_path + "' for writing");
    t << nlohmann::json{{"config", to_json(cfg)}, {"truth", to_json(ds.truth)}}.dump(2) << '\n';
  }
  Output out(c.out);
  if (format == "csv") {
    write_data_csv(*out, ds.data);
  } else {
    ojson doc;
    doc["config"] = to_json(cfg);
    doc["truth"] = to_json(ds.truth);
    doc["labels"] = ds.data.labels();
    doc["data"] = matrix_json(ds.data.values());
    *out << doc.dump(2) << '\n';
  }
  out.finish();
}

PipelineResult fit_common(Common& c, const DataMatrix& data, const std::string& alpha_method,
                          const StarsFlags& stars) {
  const PipelineOptions opts = pipeline_options(c, alpha_method);
  if (c.lambda_opt->count() > 0) return run_pipeline(data, opts, FixedLambda{c.lambda});
  return run_pipeline(data, opts, stars.selection(resolve_seed(c)));
}

void cmd_fit(Common& c, const DataSource& src, const std::string& alpha_method,
             const StarsFlags& stars, const std::string& correlation_out,
             const std::string& precision_out) {
  const std::string format = format_or(c, "json");
  require_format(format, {"csv", "json", "dot"}, "fit");
  const DataMatrix data = src.load();
  const PipelineResult r = fit_common(c, data, alpha_method, stars);
  if (!correlation_out.empty()) {
    std::ofstream f(correlation_out, std::ios::binary);
    if (!f) throw Error("cannot open '" + correlation_out + "'");
    write_matrix_csv(f, r.stage.correlation.matrix, data.labels());
  }
  if (!precision_out.empty()) {
    std::ofstream f(precision_out, std::ios::binary);
    if (!f) throw Error("cannot open '" + precision_out + "'");
    write_matrix_csv(f, r.precision.omega, data.labels());
  }
  Output out(c.out);
  if (format == "dot") {
    export_graph(*out, r.edges, r.precision, data.labels(), GraphFormat::dot);
  } else if (format == "csv") {
    *out << std::setprecision(17) << "i,j,label_i,label_j,omega_ij\n";
    for (auto [i, j] : r.edges.edges()) {
      *out << i << ',' << j << ',' << data.labels()[static_cast<std::size_t>(i)] << ','
           << data.labels()[static_cast<std::size_t>(j)] << ',' << r.precision.omega(i, j) << '\n';
    }
  } else {
    ojson doc;
    doc["estimator"] = c.estimator;
    doc["shrinkage"] = c.shrinkage;
    doc["lambda"] = r.lambda;
    doc["n"] = data.n();
    doc["p"] = data.p();
    doc["psd_repaired"] = r.stage.correlation.psd_repaired;
    doc["converged"] = r.precision.converged;
    doc["kkt_residual"] = r.precision.kkt_residual;
    if (r.stars) doc["stars"] = stars_json(*r.stars);
    if (r.stage.alpha) doc["alpha"] = alpha_json(*r.stage.alpha, data.labels());
    doc["edge_count"] = r.edges.size();
    ojson edges = ojson::array();
    for (auto [i, j] : r.edges.edges()) {
      edges.push_back({{"i", i},
                       {"j", j},
                       {"label_i", data.labels()[static_cast<std::size_t>(i)]},
                       {"label_j", data.labels()[static_cast<std::size_t>(j)]},
                       {"omega", r.precision.omega(i, j)}});
    }
    doc["edges"] = std::move(edges);
    *out << doc.dump(2) << '\n';
  }
  out.finish();
}

void cmd_stars(Common& c, const DataSource& src, const std::string& alpha_method,
               const StarsFlags& stars) {
  const std::string format = format_or(c, "csv");
  require_format(format, {"csv", "json"}, "stars");
  const DataMatrix data = src.load();
  const PipelineOptions opts = pipeline_options(c, alpha_method);
  const PipelineResult r = run_pipeline(data, opts, stars.selection(resolve_seed(c)));
  Output out(c.out);
  if (format == "csv") {
    *out << std::setprecision(17) << "lambda,instability,monotone\n";
    for (const auto& pt : r.stars->curve) *out << pt.lambda << ',' << pt.instability << ',' << pt.monotone << '\n';
  } else {
    ojson doc = stars_json(*r.stars);
    doc["estimator"] = c.estimator;
    doc["shrinkage"] = c.shrinkage;
    doc["edge_count"] = r.edges.size();
    *out << doc.dump(2) << '\n';
  }
  out.finish();
}

void cmd_roc(Common& c, SimFlags& sim, const std::string& truth_path, const DataSource& src,
             const std::string& alpha_method, const StarsFlags& stars, int points,
             double half_width, const std::string& scenario) {
  const std::string format = format_or(c, "csv");
  require_format(format, {"csv", "json"}, "roc");
  std::optional<SimulatedDataset> ds;
  if (!truth_path.empty()) {
    std::ifstream t(truth_path);
    if (!t) throw Error("cannot open '" + truth_path + "'");
    const auto doc = nlohmann::json::parse(t);
    GroundTruth truth = ground_truth_from_json(doc.contains("truth") ? doc.at("truth") : doc);
    ds = SimulatedDataset{std::move(truth), src.load()};
  } else {
    SimulationConfig cfg = sim.cfg;
    cfg.seed = resolve_seed(c);
    ds = simulate_dataset(cfg);
  }
  const PipelineOptions opts = pipeline_options(c, alpha_method);
  double center = c.lambda;
  const CorrelationStage stage = estimate_correlation(ds->data, opts);
  if (c.lambda_opt->count() == 0) {
    StarsSelection sel = stars.selection(mix_seed(resolve_seed(c), 0x53544152));
    sel.config.lambda_grid = log_lambda_grid(stage.correlation.matrix, sel.grid_size, sel.grid_min_ratio);
    std::optional<SkewnessVector> fixed;
    if (!sel.refit_alpha) fixed = stage.alpha;
    center = stars_select(ds->data, make_edge_path_fn(opts, fixed), sel.config).lambda_star;
  }
  const auto grid = roc_grid(center, half_width, points);
  const RocResult roc = roc_from_path(grid, edge_path(stage.correlation, grid, opts), ds->truth.edges);
  Output out(c.out);
  if (format == "csv") {
    write_roc_csv(*out, scenario, c.estimator, roc);
  } else {
    ojson pts = ojson::array();
    for (const auto& p : roc.points) {
      pts.push_back({{"lambda", p.lambda},
                     {"fpr", p.fpr},
                     {"fnr", p.fnr},
                     {"tpr", p.tpr},
                     {"one_minus_fpr", 1.0 - p.fpr}});
    }
    ojson doc = {{"scenario", scenario}, {"estimator", c.estimator}, {"center", center},
                 {"auc", roc.auc},       {"points", std::move(pts)}};
    *out << doc.dump(2) << '\n';
  }
  out.finish();
}

void cmd_normality(Common& c, const std::string& prices, const std::vector<double>& levels,
                   int replicates) {
  const std::string format = format_or(c, "json");
  require_format(format, {"csv", "json"}, "normality");
  const ReturnsPanel panel = ingest_prices(std::filesystem::path(prices));
  NormalityConfig cfg;
  cfg.levels = levels;
  cfg.replicates = replicates;
  cfg.seed = resolve_seed(c);
  const NormalityReport report = normality_tests(panel, cfg);
  Output out(c.out);
  if (format == "csv") {
    write_normality_csv(*out, report);
  } else {
    ojson doc;
    doc["tickers"] = panel.tickers.size();
    doc["observations"] = panel.dates.size();
    doc["tested"] = report.tested;
    doc["replicates"] = replicates;
    ojson rej = ojson::array();
    for (std::size_t l = 0; l < report.levels.size(); ++l) {
      rej.push_back({{"level", report.levels[l]},
                     {"lilliefors", report.lilliefors_rejections[l]},
                     {"jarque_bera", report.jarque_bera_rejections[l]}});
    }
    doc["rejections"] = std::move(rej);
    ojson dropped = ojson::array();
    for (const auto& d : panel.dropped_tickers) dropped.push_back({{"ticker", d.ticker}, {"reason", d.reason}});
    doc["dropped"] = std::move(dropped);
    ojson series = ojson::array();
    for (const auto& s : report.series) {
      ojson e = {{"ticker", s.ticker}, {"n", s.n}, {"skipped", s.skipped}};
      if (s.skipped) {
        e["reason"] = s.skip_reason;
      } else {
        e["lilliefors_stat"] = s.lilliefors_stat;
        e["lilliefors_p"] = s.lilliefors_p;
        e["jarque_bera_stat"] = s.jarque_bera_stat;
        e["jarque_bera_p"] = s.jarque_bera_p;
      }
      series.push_back(std::move(e));
    }
    doc["series"] = std::move(series);
    *out << doc.dump(2) << '\n';
  }
  out.finish();
}

void cmd_export(Common& c, const DataSource& src, const std::string& alpha_method,
                const StarsFlags& stars, const std::string& sectors_path) {
  const std::string format = format_or(c, "json");
  require_format(format, {"json", "dot"}, "export");
  const DataMatrix data = src.load();
  const PipelineResult r = fit_common(c, data, alpha_method, stars);
  SectorMap sectors;
  if (!sectors_path.empty()) sectors = load_sectors(std::filesystem::path(sectors_path));
  Output out(c.out);
  export_graph(*out, r.edges, r.precision, data.labels(), graph_format_from_string(format), sectors);
  out.finish();
}

struct CampaignFlags {
  std::string config_json;
  int trials = 50;
  std::vector<std::string> estimators;
  std::vector<double> r_values;
  std::vector<double> gamma_values;
  std::string center_source;
  std::string center_scope;
  std::string reference;
  int roc_points = 30;
  double half_width = 0.1;
  std::string trials_csv;
  std::string roc_csv;
};

void cmd_campaign(Common& c, CampaignFlags& f, SimFlags& sim, const StarsFlags& stars,
                  const std::string& alpha_method, CLI::App* cmd) {
  const std::string format = format_or(c, "json");
  require_format(format, {"csv", "json"}, "campaign");
  CampaignConfig cfg;
  if (!f.config_json.empty()) {
    std::ifstream in(f.config_json);
    if (!in) throw Error("cannot open '" + f.config_json + "'");
    cfg = campaign_config_from_json(nlohmann::json::parse(in));
  }
  auto given = [&](const char* name) { return cmd->count(name) > 0; };
  // Scenario grid from flags replaces the file's grid when any grid flag is given.
  if (given("--r") || given("--gamma") || given("--p") || given("--n") || given("--sparsity") ||
      given("--contamination-sd") || given("--off-diag") || given("--diagonal-boost") || given("--unit-variance") ||
      f.config_json.empty()) {
    const std::vector<double> rs = f.r_values.empty() ? std::vector<double>{0.05, 0.1, 0.2} : f.r_values;
    const std::vector<double> gs = f.gamma_values.empty() ? std::vector<double>{1.5, 2.5, 3.0} : f.gamma_values;
    cfg.scenarios.clear();
    for (double r : rs) {
      for (double g : gs) {
        Scenario s;
        s.sim = sim.cfg;
        s.sim.contamination_r = r;
        s.sim.power_gamma = g;
        std::ostringstream name;
        name << "r=" << r << ",gamma=" << g;
        s.name = name.str();
        cfg.scenarios.push_back(std::move(s));
      }
    }
  }
  if (given("--trials") || f.config_json.empty()) cfg.trials = f.trials;
  if (!f.estimators.empty()) {
    cfg.estimators.clear();
    for (const auto& e : f.estimators) cfg.estimators.push_back(estimator_from_string(e));
  }
  if (c.seed_opt->count() > 0 || f.config_json.empty()) cfg.seed = resolve_seed(c);
  if (c.lambda_opt->count() > 0) throw Error("campaign: --lambda is not used; centers come from StARS");
  cfg.shrinkage = shrinkage_from_string(c.shrinkage);
  if (!alpha_method.empty()) cfg.alpha_method = alpha_method_from_string(alpha_method);
  if (given("--subsamples") || f.config_json.empty()) cfg.num_subsamples = stars.subsamples;
  if (given("--subsample-size") || f.config_json.empty()) cfg.subsample_size = stars.subsample_size;
  if (given("--beta") || f.config_json.empty()) cfg.beta_threshold = stars.beta;
  if (given("--grid-size") || f.config_json.empty()) cfg.stars_grid_size = stars.grid_size;
  if (given("--min-ratio") || f.config_json.empty()) cfg.stars_grid_min_ratio = stars.min_ratio;
  if (given("--roc-points") || f.config_json.empty()) cfg.roc_points = f.roc_points;
  if (given("--half-width") || f.config_json.empty()) cfg.roc_half_width = f.half_width;
  if (!f.center_source.empty()) {
    cfg.center_source = f.center_source == "shared" ? CenterSource::shared : CenterSource::per_estimator;
  }
  if (!f.center_scope.empty()) {
    cfg.center_scope = f.center_scope == "global" ? CenterScope::global : CenterScope::per_trial;
  }
  if (!f.reference.empty()) cfg.reference_estimator = estimator_from_string(f.reference);

  const CampaignResult result = run_campaign(cfg);
  if (!f.trials_csv.empty()) {
    std::ofstream t(f.trials_csv, std::ios::binary);
    if (!t) throw Error("cannot open '" + f.trials_csv + "'");
    write_trials_csv(t, result.trials);
  }
  if (!f.roc_csv.empty()) {
    std::ofstream t(f.roc_csv, std::ios::binary);
    if (!t) throw Error("cannot open '" + f.roc_csv + "'");
    write_mean_roc_csv(t, result.cells);
  }
  Output out(c.out);
  if (format == "csv") {
    write_trials_csv(*out, result.trials);
  } else {
    *out << summary_to_json(result).dump(2) << '\n';
  }
  out.finish();
  for (const auto& cell : result.cells) {
    std::cerr << std::fixed << std::setprecision(1) << cell.scenario << '\t'
              << to_string(cell.estimator) << "\tAUC " << 100 * cell.auc.mean << " ("
              << 100 * cell.auc.sd << ")\tFPR " << 100 * cell.fpr.mean << "\tFNR "
              << 100 * cell.fnr.mean << "\tfailed " << cell.failed_trials << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-based sparse graphical models for skewed data"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option values from a TOML/INI file; flags override it");

  Common c;
  c.seed_opt = app.add_option("--seed", c.seed, "Random seed (drawn from entropy and printed if omitted)");
  app.add_option("--estimator", c.estimator, "pearson|skeptic_rho|skeptic_tau|skew_skeptic_rho|skew_skeptic_tau|skew_keptic")
      ->capture_default_str()
      ->check(CLI::IsMember({"pearson", "skeptic_rho", "skeptic_tau", "skew_skeptic_rho",
                             "skew_skeptic_tau", "skew_keptic"}));
  app.add_option("--shrinkage", c.shrinkage, "glasso|clime|dantzig")
      ->capture_default_str()
      ->check(CLI::IsMember({"glasso", "clime", "dantzig"}));
  c.lambda_opt = app.add_option("--lambda", c.lambda, "Fixed regularization level (StARS when omitted)");
  app.add_option("--out", c.out, "Output path ('-' for stdout)")->capture_default_str();
  app.add_option("--format", c.format, "csv|json|dot");
  app.add_option("--threads", c.threads, "Worker threads (0 = hardware concurrency)");

  SimFlags sim_simulate, sim_roc, sim_campaign;
  DataSource src_fit, src_stars, src_roc, src_export;
  StarsFlags stars_fit, stars_stars, stars_roc, stars_export, stars_campaign;
  std::string alpha_fit, alpha_stars, alpha_roc, alpha_export, alpha_campaign;

  auto* simulate = app.add_subcommand("simulate", "Draw a synthetic dataset");
  std::string truth_out;
  sim_simulate.add(simulate);
  simulate->add_option("--truth", truth_out, "Write the ground truth JSON here");

  auto* fit = app.add_subcommand("fit", "Estimate a sparse graph");
  std::string correlation_out, precision_out;
  src_fit.add(fit);
  stars_fit.add(fit);
  fit->add_option("--alpha-method", alpha_fit, "moments|skew_normal_mle|skew_t_mle");
  fit->add_option("--correlation-out", correlation_out, "Write the correlation estimate CSV here");
  fit->add_option("--precision-out", precision_out, "Write the precision estimate CSV here");

  auto* stars = app.add_subcommand("stars", "Stability selection curve");
  src_stars.add(stars);
  stars_stars.add(stars);
  stars->add_option("--alpha-method", alpha_stars, "moments|skew_normal_mle|skew_t_mle");

  auto* roc = app.add_subcommand("roc", "ROC curve around the selected lambda");
  std::string truth_in, scenario = "custom";
  int points = 30;
  double half_width = 0.1;
  sim_roc.add(roc);
  src_roc.add(roc);
  stars_roc.add(roc);
  roc->add_option("--truth", truth_in, "Ground truth JSON (with --data); simulates when omitted");
  roc->add_option("--alpha-method", alpha_roc, "moments|skew_normal_mle|skew_t_mle");
  roc->add_option("--points", points, "Grid points")->capture_default_str();
  roc->add_option("--half-width", half_width, "Grid half width")->capture_default_str();
  roc->add_option("--scenario", scenario, "Scenario label for the CSV")->capture_default_str();

  auto* normality = app.add_subcommand("normality", "Marginal normality tests on log returns");
  std::string prices;
  std::vector<double> levels = {0.01, 0.05};
  int replicates = 10000;
  normality->add_option("--prices", prices, "Price CSV")->required();
  normality->add_option("--levels", levels, "Significance levels")->delimiter(',')->capture_default_str();
  normality->add_option("--replicates", replicates, "Lilliefors null replicates")->capture_default_str();

  auto* exp = app.add_subcommand("export", "Estimate a graph and write it as JSON or DOT");
  std::string sectors;
  src_export.add(exp);
  stars_export.add(exp);
  exp->add_option("--alpha-method", alpha_export, "moments|skew_normal_mle|skew_t_mle");
  exp->add_option("--sectors", sectors, "CSV 'ticker,sector' attached to nodes");

  auto* campaign = app.add_subcommand("campaign", "Simulation study over scenarios and estimators");
  CampaignFlags cf;
  sim_campaign.add(campaign, false);
  stars_campaign.add(campaign);
  campaign->add_option("--campaign-config", cf.config_json, "Campaign JSON; flags given here override it");
  campaign->add_option("--trials", cf.trials, "Trials per scenario")->capture_default_str();
  campaign->add_option("--estimators", cf.estimators, "Estimators to compare")->delimiter(',');
  campaign->add_option("--r", cf.r_values, "Contamination levels")->delimiter(',');
  campaign->add_option("--gamma", cf.gamma_values, "Power exponents")->delimiter(',');
  campaign->add_option("--center-source", cf.center_source, "per_estimator|shared")
      ->check(CLI::IsMember({"per_estimator", "shared"}));
  campaign->add_option("--center-scope", cf.center_scope, "per_trial|global")
      ->check(CLI::IsMember({"per_trial", "global"}));
  campaign->add_option("--reference", cf.reference, "Estimator whose lambda is shared");
  campaign->add_option("--roc-points", cf.roc_points, "ROC grid points")->capture_default_str();
  campaign->add_option("--half-width", cf.half_width, "ROC grid half width")->capture_default_str();
  campaign->add_option("--alpha-method", alpha_campaign, "moments|skew_normal_mle|skew_t_mle");
  campaign->add_option("--trials-csv", cf.trials_csv, "Write per-trial rows here");
  campaign->add_option("--roc-csv", cf.roc_csv, "Write mean ROC curves here");

  CLI11_PARSE(app, argc, argv);

  try {
    set_worker_count(c.threads);
    if (*simulate) cmd_simulate(c, sim_simulate, truth_out);
    if (*fit) cmd_fit(c, src_fit, alpha_fit, stars_fit, correlation_out, precision_out);
    if (*stars) cmd_stars(c, src_stars, alpha_stars, stars_stars);
    if (*roc) cmd_roc(c, sim_roc, truth_in, src_roc, alpha_roc, stars_roc, points, half_width, scenario);
    if (*normality) cmd_normality(c, prices, levels, replicates);
    if (*exp) cmd_export(c, src_export, alpha_export, stars_export, sectors);
    if (*campaign) cmd_campaign(c, cf, sim_campaign, stars_campaign, alpha_campaign, campaign);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
