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

#include "skewgm/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "skewgm/parallel.hpp"

namespace skewgm {
namespace {

// Sub-seed tag for the subsampling stream; the data stream uses the trial seed itself.
constexpr std::uint64_t kStarsStream = 0x53544152;

struct Center {
  double lambda = 0.0;
  bool threshold_met = false;
};

PipelineOptions options_for(const CampaignConfig& cfg, Estimator e) {
  PipelineOptions opts;
  opts.estimator = e;
  opts.shrinkage = cfg.shrinkage;
  opts.alpha_method = cfg.alpha_method;
  return opts;
}

StarsConfig stars_config(const CampaignConfig& cfg, std::uint64_t seed) {
  StarsConfig s;
  s.num_subsamples = cfg.num_subsamples;
  s.subsample_size = cfg.subsample_size;
  s.beta_threshold = cfg.beta_threshold;
  s.seed = seed;
  return s;
}

Center select_center(const CampaignConfig& cfg, const DataMatrix& data, const CorrelationStage& stage,
                     const PipelineOptions& opts, std::uint64_t seed) {
  StarsConfig scfg = stars_config(cfg, seed);
  scfg.lambda_grid =
      log_lambda_grid(stage.correlation.matrix, cfg.stars_grid_size, cfg.stars_grid_min_ratio);
  const StarsResult r = stars_select(data, make_edge_path_fn(opts, stage.alpha), scfg);
  return {r.lambda_star, r.threshold_met};
}

Center select_center(const CampaignConfig& cfg, const DataMatrix& data, Estimator e,
                     std::uint64_t seed) {
  const PipelineOptions opts = options_for(cfg, e);
  return select_center(cfg, data, estimate_correlation(data, opts), opts, seed);
}

void score(const CampaignConfig& cfg, const SimulatedDataset& ds, const CorrelationStage& stage,
           const PipelineOptions& opts, const Center& center, TrialRecord& rec) {
  rec.lambda_center = center.lambda;
  rec.stars_threshold_met = center.threshold_met;
  const auto grid = roc_grid(center.lambda, cfg.roc_half_width, cfg.roc_points);
  const auto path = edge_path(stage.correlation, grid, opts);
  rec.roc = roc_from_path(grid, path, ds.truth.edges);
  rec.auc = rec.roc.auc;
  const EdgeSet at_center =
      edges_from_precision(estimate_precision(stage.correlation, center.lambda, opts), opts.zero_tol);
  const Confusion c = confusion(at_center, ds.truth.edges);
  const Rates r = rates(c.fp, c.fn, ds.truth.edges);
  rec.fpr = r.fpr;
  rec.fnr = r.fnr;
  rec.edge_count = static_cast<long long>(at_center.size());
  rec.true_edge_count = static_cast<long long>(ds.truth.edges.size());
  rec.ok = true;
}

double percent(double fraction) { return std::round(fraction * 1000.0) / 10.0; }

nlohmann::ordered_json mean_se_json(const MeanSe& m) {
  return {{"mean", m.mean}, {"sd", m.sd}, {"se", m.se}, {"count", m.count}};
}

nlohmann::ordered_json mean_se_percent(const MeanSe& m) {
  return {{"mean", percent(m.mean)}, {"sd", percent(m.sd)}, {"se", percent(m.se)}};
}

std::string_view to_string(CenterSource s) {
  return s == CenterSource::shared ? "shared" : "per_estimator";
}

std::string_view to_string(CenterScope s) { return s == CenterScope::global ? "global" : "per_trial"; }

}  // namespace

std::vector<Scenario> default_scenarios() {
  std::vector<Scenario> out;
  for (double r : {0.05, 0.1, 0.2}) {
    for (double gamma : {1.5, 2.5, 3.0}) {
      Scenario s;
      std::ostringstream name;
      name << "r=" << r << ",gamma=" << gamma;
      s.name = name.str();
      s.sim.contamination_r = r;
      s.sim.power_gamma = gamma;
      out.push_back(std::move(s));
    }
  }
  return out;
}

void validate(const CampaignConfig& cfg) {
  if (cfg.scenarios.empty()) throw Error("campaign: no scenarios");
  if (cfg.estimators.empty()) throw Error("campaign: no estimators");
  if (cfg.trials < 1) throw Error("campaign: trials must be positive");
  if (cfg.roc_points < 1) throw Error("campaign: roc_points must be positive");
  if (!(cfg.roc_half_width >= 0.0)) throw Error("campaign: roc_half_width must be non-negative");
  if (cfg.stars_grid_size < 2) throw Error("campaign: stars_grid_size must be at least 2");
  for (const auto& s : cfg.scenarios) validate(s.sim);
}

std::vector<double> roc_grid(double center, double half_width, int count) {
  if (!(center > 0.0)) throw Error("roc_grid: center must be positive");
  return lambda_grid_around(center, std::min(half_width, 0.999 * center), count);
}

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t scenario, int trial) {
  return mix_seed(mix_seed(campaign_seed, scenario), static_cast<std::uint64_t>(trial));
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const std::size_t S = cfg.scenarios.size();
  const std::size_t E = cfg.estimators.size();
  const auto T = static_cast<std::size_t>(cfg.trials);

  auto dataset = [&](std::size_t s, int t) {
    SimulationConfig sim = cfg.scenarios[s].sim;
    sim.seed = trial_seed(cfg.seed, s, t);
    return simulate_dataset(sim);
  };

  // Globally scoped centers, indexed [scenario][estimator]; errors kept per cell.
  std::vector<std::vector<std::optional<Center>>> global_center(S, std::vector<std::optional<Center>>(E));
  std::vector<std::vector<std::string>> global_error(S, std::vector<std::string>(E));
  if (cfg.center_scope == CenterScope::global) {
    parallel_for(S, [&](std::size_t s) {
      const SimulatedDataset ds = dataset(s, 0);
      const std::uint64_t seed = mix_seed(trial_seed(cfg.seed, s, 0), kStarsStream);
      std::map<Estimator, std::optional<Center>> memo;
      std::map<Estimator, std::string> memo_error;
      for (std::size_t e = 0; e < E; ++e) {
        const Estimator who = cfg.center_source == CenterSource::shared ? cfg.reference_estimator
                                                                        : cfg.estimators[e];
        if (!memo.contains(who)) {
          try {
            memo[who] = select_center(cfg, ds.data, who, seed);
          } catch (const std::exception& ex) {
            memo[who] = std::nullopt;
            memo_error[who] = ex.what();
          }
        }
        global_center[s][e] = memo[who];
        global_error[s][e] = memo_error[who];
      }
    });
  }

  CampaignResult result;
  result.config = cfg;
  result.trials.resize(S * T * E);
  parallel_for(S * T, [&](std::size_t job) {
    const std::size_t s = job / T;
    const int t = static_cast<int>(job % T);
    const std::uint64_t data_seed = trial_seed(cfg.seed, s, t);
    const std::uint64_t stars_seed = mix_seed(data_seed, kStarsStream);
    TrialRecord* recs = &result.trials[(s * T + static_cast<std::size_t>(t)) * E];
    for (std::size_t e = 0; e < E; ++e) {
      recs[e].scenario = cfg.scenarios[s].name;
      recs[e].scenario_index = s;
      recs[e].estimator = cfg.estimators[e];
      recs[e].trial = t;
      recs[e].data_seed = data_seed;
    }

    std::optional<SimulatedDataset> ds;
    try {
      ds = dataset(s, t);
    } catch (const std::exception& ex) {
      for (std::size_t e = 0; e < E; ++e) recs[e].error = std::string("simulate: ") + ex.what();
      return;
    }

    std::optional<Center> shared;
    std::string shared_error;
    if (cfg.center_scope == CenterScope::per_trial && cfg.center_source == CenterSource::shared) {
      try {
        shared = select_center(cfg, ds->data, cfg.reference_estimator, stars_seed);
      } catch (const std::exception& ex) {
        shared_error = ex.what();
      }
    }

    for (std::size_t e = 0; e < E; ++e) {
      TrialRecord& rec = recs[e];
      try {
        const PipelineOptions opts = options_for(cfg, cfg.estimators[e]);
        const CorrelationStage stage = estimate_correlation(ds->data, opts);
        Center center;
        if (cfg.center_scope == CenterScope::global) {
          if (!global_center[s][e]) throw Error("center selection: " + global_error[s][e]);
          center = *global_center[s][e];
        } else if (cfg.center_source == CenterSource::shared) {
          if (!shared) throw Error("center selection: " + shared_error);
          center = *shared;
        } else {
          center = select_center(cfg, ds->data, stage, opts, stars_seed);
        }
        score(cfg, *ds, stage, opts, center, rec);
      } catch (const std::exception& ex) {
        rec.ok = false;
        rec.error = ex.what();
      }
    }
  });

  result.cells = summarize(cfg, result.trials);
  return result;
}

std::vector<CellSummary> summarize(const CampaignConfig& cfg,
                                   const std::vector<TrialRecord>& trials) {
  std::vector<CellSummary> cells;
  for (std::size_t s = 0; s < cfg.scenarios.size(); ++s) {
    for (Estimator e : cfg.estimators) {
      CellSummary cell;
      cell.scenario = cfg.scenarios[s].name;
      cell.estimator = e;
      std::vector<double> auc, fpr, fnr, lambda;
      std::vector<const RocResult*> rocs;
      for (const auto& rec : trials) {
        if (rec.scenario_index != s || rec.estimator != e) continue;
        if (!rec.ok) {
          ++cell.failed_trials;
          continue;
        }
        ++cell.ok_trials;
        auc.push_back(rec.auc);
        fpr.push_back(rec.fpr);
        fnr.push_back(rec.fnr);
        lambda.push_back(rec.lambda_center);
        rocs.push_back(&rec.roc);
      }
      cell.auc = mean_se(auc);
      cell.fpr = mean_se(fpr);
      cell.fnr = mean_se(fnr);
      cell.lambda_center = mean_se(lambda);
      if (!rocs.empty()) {
        const std::size_t k = rocs.front()->points.size();
        cell.mean_roc.points.assign(k, RocPoint{});
        for (const RocResult* r : rocs) {
          for (std::size_t i = 0; i < k; ++i) {
            cell.mean_roc.points[i].lambda += r->points[i].lambda;
            cell.mean_roc.points[i].fpr += r->points[i].fpr;
            cell.mean_roc.points[i].fnr += r->points[i].fnr;
            cell.mean_roc.points[i].tpr += r->points[i].tpr;
          }
        }
        const double m = static_cast<double>(rocs.size());
        for (auto& pt : cell.mean_roc.points) {
          pt.lambda /= m;
          pt.fpr /= m;
          pt.fnr /= m;
          pt.tpr /= m;
        }
        cell.mean_roc.auc = auc_from_points(cell.mean_roc.points);
        cell.mean_roc.trial_count = static_cast<int>(rocs.size());
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials) {
  const auto old_precision = out.precision(17);
  out << "scenario,estimator,trial,data_seed,ok,lambda_center,stars_threshold_met,auc,fpr,fnr,"
         "edge_count,true_edge_count,error\n";
  for (const auto& r : trials) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    out << '"' << r.scenario << "\"," << to_string(r.estimator) << ',' << r.trial << ','
        << r.data_seed << ',' << (r.ok ? 1 : 0) << ',';
    if (r.ok) {
      out << r.lambda_center << ',' << (r.stars_threshold_met ? 1 : 0) << ',' << r.auc << ','
          << r.fpr << ',' << r.fnr << ',' << r.edge_count << ',' << r.true_edge_count << ",";
    } else {
      out << ",,,,,,,";
    }
    out << '"' << err << "\"\n";
  }
  out.precision(old_precision);
}

void write_mean_roc_csv(std::ostream& out, const std::vector<CellSummary>& cells) {
  bool header = true;
  for (const auto& c : cells) {
    if (c.mean_roc.points.empty()) continue;
    write_roc_csv(out, '"' + c.scenario + '"', std::string(to_string(c.estimator)), c.mean_roc,
                  header);
    header = false;
  }
}

nlohmann::ordered_json summary_to_json(const CampaignResult& result) {
  nlohmann::ordered_json doc;
  doc["config"] = to_json(result.config);
  auto scenarios = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < result.config.scenarios.size(); ++s) {
    const Scenario& sc = result.config.scenarios[s];
    nlohmann::ordered_json entry;
    entry["name"] = sc.name;
    entry["contamination_r"] = sc.sim.contamination_r;
    entry["power_gamma"] = sc.sim.power_gamma;
    nlohmann::ordered_json est;
    for (const auto& cell : result.cells) {
      if (cell.scenario != sc.name) continue;
      nlohmann::ordered_json c;
      c["ok_trials"] = cell.ok_trials;
      c["failed_trials"] = cell.failed_trials;
      c["auc"] = mean_se_json(cell.auc);
      c["fpr"] = mean_se_json(cell.fpr);
      c["fnr"] = mean_se_json(cell.fnr);
      c["lambda_center"] = mean_se_json(cell.lambda_center);
      c["percent"] = {{"auc", mean_se_percent(cell.auc)},
                      {"fpr", mean_se_percent(cell.fpr)},
                      {"fnr", mean_se_percent(cell.fnr)}};
      est[std::string(to_string(cell.estimator))] = std::move(c);
    }
    entry["estimators"] = std::move(est);
    scenarios.push_back(std::move(entry));
  }
  doc["scenarios"] = std::move(scenarios);
  return doc;
}

nlohmann::ordered_json to_json(const CampaignConfig& cfg) {
  nlohmann::ordered_json doc;
  auto scenarios = nlohmann::ordered_json::array();
  for (const auto& s : cfg.scenarios) {
    scenarios.push_back({{"name", s.name}, {"sim", to_json(s.sim)}});
  }
  auto estimators = nlohmann::ordered_json::array();
  for (Estimator e : cfg.estimators) estimators.push_back(std::string(to_string(e)));
  doc["scenarios"] = std::move(scenarios);
  doc["estimators"] = std::move(estimators);
  doc["trials"] = cfg.trials;
  doc["seed"] = cfg.seed;
  doc["shrinkage"] = std::string(to_string(cfg.shrinkage));
  doc["alpha_method"] = cfg.alpha_method ? nlohmann::ordered_json(std::string(to_string(*cfg.alpha_method)))
                                         : nlohmann::ordered_json(nullptr);
  doc["num_subsamples"] = cfg.num_subsamples;
  doc["subsample_size"] = cfg.subsample_size;
  doc["beta_threshold"] = cfg.beta_threshold;
  doc["stars_grid_size"] = cfg.stars_grid_size;
  doc["stars_grid_min_ratio"] = cfg.stars_grid_min_ratio;
  doc["roc_points"] = cfg.roc_points;
  doc["roc_half_width"] = cfg.roc_half_width;
  doc["center_source"] = std::string(to_string(cfg.center_source));
  doc["center_scope"] = std::string(to_string(cfg.center_scope));
  doc["reference_estimator"] = std::string(to_string(cfg.reference_estimator));
  return doc;
}

CampaignConfig campaign_config_from_json(const nlohmann::json& j) {
  CampaignConfig cfg;
  if (j.contains("scenarios")) {
    cfg.scenarios.clear();
    for (const auto& s : j.at("scenarios")) {
      Scenario sc;
      sc.sim = simulation_config_from_json(s.value("sim", nlohmann::json::object()));
      sc.name = s.value("name", std::string());
      if (sc.name.empty()) {
        std::ostringstream name;
        name << "r=" << sc.sim.contamination_r << ",gamma=" << sc.sim.power_gamma;
        sc.name = name.str();
      }
      cfg.scenarios.push_back(std::move(sc));
    }
  }
  if (j.contains("estimators")) {
    cfg.estimators.clear();
    for (const auto& e : j.at("estimators")) cfg.estimators.push_back(estimator_from_string(e.get<std::string>()));
  }
  cfg.trials = j.value("trials", cfg.trials);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("shrinkage")) cfg.shrinkage = shrinkage_from_string(j.at("shrinkage").get<std::string>());
  if (j.contains("alpha_method") && !j.at("alpha_method").is_null()) {
    cfg.alpha_method = alpha_method_from_string(j.at("alpha_method").get<std::string>());
  }
  cfg.num_subsamples = j.value("num_subsamples", cfg.num_subsamples);
  cfg.subsample_size = j.value("subsample_size", cfg.subsample_size);
  cfg.beta_threshold = j.value("beta_threshold", cfg.beta_threshold);
  cfg.stars_grid_size = j.value("stars_grid_size", cfg.stars_grid_size);
  cfg.stars_grid_min_ratio = j.value("stars_grid_min_ratio", cfg.stars_grid_min_ratio);
  cfg.roc_points = j.value("roc_points", cfg.roc_points);
  cfg.roc_half_width = j.value("roc_half_width", cfg.roc_half_width);
  if (j.contains("center_source")) {
    const auto v = j.at("center_source").get<std::string>();
    if (v == "shared") {
      cfg.center_source = CenterSource::shared;
    } else if (v == "per_estimator") {
      cfg.center_source = CenterSource::per_estimator;
    } else {
      throw Error("campaign: unknown center_source '" + v + "'");
    }
  }
  if (j.contains("center_scope")) {
    const auto v = j.at("center_scope").get<std::string>();
    if (v == "global") {
      cfg.center_scope = CenterScope::global;
    } else if (v == "per_trial") {
      cfg.center_scope = CenterScope::per_trial;
    } else {
      throw Error("campaign: unknown center_scope '" + v + "'");
    }
  }
  if (j.contains("reference_estimator")) {
    cfg.reference_estimator = estimator_from_string(j.at("reference_estimator").get<std::string>());
  }
  validate(cfg);
  return cfg;
}

}  // namespace skewgm
