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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "skewgm/campaign.hpp"
#include "skewgm/lp.hpp"
#include "skewgm/parallel.hpp"
#include "skewgm/pipeline.hpp"
#include "skewgm/precision.hpp"
#include "skewgm/rankcorr.hpp"
#include "skewgm/returns.hpp"
#include "skewgm/selection.hpp"
#include "skewgm/simulate.hpp"
#include "skewgm/skeptic.hpp"

namespace {

using namespace skewgm;

// Criterion 1.
constexpr double kTableAucTarget = 91.0;
constexpr double kTableAucBand = 4.0;
constexpr double kPearsonAucCeiling = 65.0;
constexpr int kTableTrials = 50;
constexpr int kDiagnosticTrials = 20;
// Criterion 3.
constexpr int kFactorPairs = 10000;
// Criterion 4.
constexpr double kRateSpreadLimit = 2.5;
constexpr int kRateReplicates = 20;
constexpr int kPopulationDraws = 1000000;
// Criterion 5.
constexpr double kGlassoKkt = 1e-5;
constexpr double kGlassoInverseTol = 1e-6;
// Criterion 6.
constexpr double kLpFeasibility = 1e-6;
constexpr double kLpObjective = 1e-4;
// Criterion 7.
constexpr double kKendallTol = 1e-12;
// Criterion 8.
constexpr double kQuadratureTol = 1e-8;
// Criterion 9.
constexpr int kStarsRuns = 50;
constexpr double kStarsPassFraction = 0.8;

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& what) {
  std::printf("INFO %s\n", what.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Matrix sample_correlation(std::mt19937_64& rng, Index p, Index m) {
  std::normal_distribution<double> z;
  Matrix x(m, p);
  for (Index i = 0; i < m; ++i) {
    const double f = z(rng);
    for (Index j = 0; j < p; ++j) x(i, j) = 0.4 * f + z(rng);
  }
  const Matrix c = x.rowwise() - x.colwise().mean();
  const Matrix s = c.transpose() * c;
  const Vector d = s.diagonal().cwiseSqrt().cwiseInverse();
  return d.asDiagonal() * s * d.asDiagonal();
}

// ---------------------------------------------------------------------------

const CellSummary& cell(const CampaignResult& r, Estimator e) {
  return *std::find_if(r.cells.begin(), r.cells.end(),
                       [&](const CellSummary& c) { return c.estimator == e; });
}

void criterion_table_cell() {
  CampaignConfig cfg;
  cfg.scenarios = {default_scenarios().front()};
  cfg.estimators = {Estimator::skeptic_tau, Estimator::skew_skeptic_tau, Estimator::pearson};
  cfg.trials = kTableTrials;
  cfg.seed = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = run_campaign(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto& sk = cell(res, Estimator::skeptic_tau);
  const auto& ssk = cell(res, Estimator::skew_skeptic_tau);
  const auto& pe = cell(res, Estimator::pearson);
  auto in_band = [](const CellSummary& c) {
    return std::abs(100 * c.auc.mean - kTableAucTarget) <= kTableAucBand && c.failed_trials == 0;
  };
  auto line = [](const char* name, const CellSummary& c) {
    return fmt("%s AUC %.1f (sd %.1f) FPR %.1f FNR %.1f, %d failed", name, 100 * c.auc.mean,
               100 * c.auc.sd, 100 * c.fpr.mean, 100 * c.fnr.mean, c.failed_trials);
  };
  const bool ok = in_band(sk) && in_band(ssk) && 100 * pe.auc.mean < kPearsonAucCeiling;
  report(1, ok,
         fmt("r=0.05 gamma=1.5 p=100 n=200, %d trials (%.0f s): ", kTableTrials, secs) +
             line("skeptic_tau", sk) + "; " + line("skew_skeptic_tau", ssk) + "; " +
             line("pearson", pe) +
             fmt("; target %.1f +- %.1f, pearson < %.0f", kTableAucTarget, kTableAucBand,
                 kPearsonAucCeiling));

  // Same cell with the generator normalized to unit variance and a 0.2
  // diagonal boost. Reported for comparison only.
  CampaignConfig alt = cfg;
  alt.trials = kDiagnosticTrials;
  alt.scenarios.front().sim.diagonal_boost = 0.2;
  alt.scenarios.front().sim.unit_variance = true;
  const auto ares = run_campaign(alt);
  info(fmt("criterion 1 with unit-variance generator (boost 0.2), %d trials: ", kDiagnosticTrials) +
       line("skeptic_tau", cell(ares, Estimator::skeptic_tau)) + "; " +
       line("skew_skeptic_tau", cell(ares, Estimator::skew_skeptic_tau)) + "; " +
       line("pearson", cell(ares, Estimator::pearson)));
}

// ---------------------------------------------------------------------------

void criterion_reduction() {
  bool ok = true;
  int checked = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    SimulationConfig sim;
    sim.p = 15 + static_cast<int>(s);
    sim.n = 50 + 10 * static_cast<int>(s);
    sim.sparsity = 0.1;
    sim.seed = 1000 + s;
    const auto ds = simulate_dataset(sim);
    const auto zero = SkewnessVector::zeros(ds.data.p());
    ok &= skew_skeptic(ds.data, Statistic::kendall, zero).matrix ==
          skeptic_from_tau(kendall_tau_matrix(ds.data)).matrix;
    ok &= skew_skeptic(ds.data, Statistic::spearman, zero).matrix ==
          skeptic_from_rho(spearman_rho_matrix(ds.data)).matrix;
    ++checked;
  }
  report(2, ok, fmt("alpha = 0 skew estimate equals plain estimate bit-for-bit on %d datasets (tau and rho)",
                    checked));
}

void criterion_factor_algebra() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-kAlphaCap, kAlphaCap);
  bool ok = skew_correction_factor(1, -1) == 0.0;
  for (int k = 0; k < kFactorPairs; ++k) {
    const double a = u(rng), b = u(rng);
    const double f = skew_correction_factor(a, b);
    ok &= f > -1.0 && f <= 1.0;
    ok &= skew_correction_factor(a, a) == 1.0;
    ok &= skew_correction_factor(std::abs(a), std::abs(b)) >=
          skew_correction_factor(std::abs(a), -std::abs(b));
  }
  report(3, ok, fmt("B in (-1,1], B(a,a)=1, B(1,-1)=0, B(a,b)>=B(a,-b) over %d random pairs", kFactorPairs));
}

// ---------------------------------------------------------------------------

// Latent correlation: blocks of five with within-block correlation 0.5.
// Shapes cycle through three values so every shape pair occurs.
constexpr std::array<double, 3> kRateShapes = {1.0, 2.0, 4.0};
constexpr double kRateWithin = 0.5;

void criterion_rate_scaling() {
  // Population correlation of (X_i, X_j) depends only on (latent corr,
  // alpha_i, alpha_j); each combination is estimated once from 1e6 draws.
  std::map<std::tuple<double, double, double>, double> pop;
  auto population = [&](double r, double a, double b) {
    const auto key = std::make_tuple(r, std::min(a, b), std::max(a, b));
    if (auto it = pop.find(key); it != pop.end()) return it->second;
    const auto d = sample_csn_bivariate(r, {std::get<1>(key), std::get<2>(key)}, kPopulationDraws,
                                       mix_seed(77, pop.size()));
    const double c = pearson_correlation(d).matrix(0, 1);
    pop[key] = c;
    return c;
  };

  std::vector<double> medians;
  std::string detail;
  for (Index p : {25, 100}) {
    Matrix R = Matrix::Identity(p, p);
    Vector alpha(p);
    for (Index j = 0; j < p; ++j) alpha(j) = kRateShapes[static_cast<std::size_t>(j % 3)];
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < p; ++j)
        if (i != j && i / 5 == j / 5) R(i, j) = kRateWithin;
    Matrix target = Matrix::Identity(p, p);
    for (Index i = 0; i < p; ++i)
      for (Index j = i + 1; j < p; ++j)
        target(i, j) = target(j, i) = population(R(i, j), alpha(i), alpha(j));

    for (int n : {100, 400, 1600}) {
      std::vector<double> scaled;
      for (int rep = 0; rep < kRateReplicates; ++rep) {
        const auto d = sample_csn(R, alpha, n, mix_seed(static_cast<std::uint64_t>(p * 10000 + n), rep));
        const auto a = estimate_alpha_moments(d);
        const Matrix s = skew_skeptic(d, Statistic::kendall, a).matrix;
        const double err = (s - target).cwiseAbs().maxCoeff();
        scaled.push_back(err * std::sqrt(n / std::log(static_cast<double>(p))));
      }
      std::nth_element(scaled.begin(), scaled.begin() + kRateReplicates / 2, scaled.end());
      const double med = scaled[kRateReplicates / 2];
      medians.push_back(med);
      detail += fmt(" (n=%d,p=%d)=%.3f", n, static_cast<int>(p), med);
    }
  }
  const double ratio = *std::max_element(medians.begin(), medians.end()) /
                       *std::min_element(medians.begin(), medians.end());
  report(4, ratio < kRateSpreadLimit,
         fmt("median max-norm error * sqrt(n/log p) spread %.3f (limit %.1f), moments shapes;", ratio,
             kRateSpreadLimit) +
             detail);
}

// ---------------------------------------------------------------------------

void criterion_glasso() {
  std::mt19937_64 rng(5);
  const GlassoOptions tight{1e-9, 20000};
  double worst_kkt = 0;
  for (int k = 0; k < 100; ++k) {
    const Index p = 2 + static_cast<Index>(rng() % 29);
    const Matrix S = sample_correlation(rng, p, p + 1 + static_cast<Index>(rng() % 40));
    const double lam = 0.02 + 0.3 * std::uniform_real_distribution<double>()(rng);
    const auto est = glasso(S, lam, tight);
    worst_kkt = std::max(worst_kkt, oracle::glasso_kkt(S, est.omega, lam));
  }
  double worst_inverse = 0;
  for (int k = 0; k < 20; ++k) {
    const Index p = 2 + static_cast<Index>(rng() % 9);
    const Matrix S = sample_correlation(rng, p, 3 * p + 10);
    const auto est = glasso(S, 0.0, tight);
    worst_inverse = std::max(worst_inverse, (est.omega - S.inverse()).cwiseAbs().maxCoeff());
  }
  bool saturation = true;
  for (int k = 0; k < 20; ++k) {
    const Index p = 3 + static_cast<Index>(rng() % 20);
    const Matrix S = sample_correlation(rng, p, p + 5);
    Matrix off = S.cwiseAbs();
    off.diagonal().setZero();
    const double lam = off.maxCoeff() * (1.0 + 0.5 * std::uniform_real_distribution<double>()(rng));
    const auto est = glasso(S, lam);
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < p; ++j)
        saturation &= est.omega(i, j) == (i == j ? 1.0 / (S(i, i) + lam) : 0.0);
  }
  double worst_dual = 0;
  for (int k = 0; k < 10; ++k) {
    const Matrix S = sample_correlation(rng, 4, 12);
    const auto est = glasso(S, 0.1, tight);
    worst_dual = std::max(worst_dual, std::abs(glasso_objective(S, est.omega, 0.1) -
                                               oracle::glasso_dual(S, 0.1).primal_objective));
  }
  report(5,
         worst_kkt <= kGlassoKkt && worst_inverse <= kGlassoInverseTol && saturation &&
             worst_dual <= 1e-5,
         fmt("max KKT %.2e over 100 inputs (p<=30, limit %.0e); lambda=0 inverse error %.2e "
             "(limit %.0e); saturation exact: %s; p=4 objective gap to dual solver %.2e",
             worst_kkt, kGlassoKkt, worst_inverse, kGlassoInverseTol, saturation ? "yes" : "no",
             worst_dual));
}

// ---------------------------------------------------------------------------

void criterion_lp() {
  std::ifstream in(SKEWGM_TEST_DATA_DIR "/lp_reference.json");
  if (!in) {
    report(6, false, "lp_reference.json not found");
    return;
  }
  const auto doc = nlohmann::json::parse(in);
  double worst_violation = 0, worst_gap = 0;
  int cases = 0;
  bool feasibility_agrees = true;
  for (const auto& c : doc["cases"]) {
    const auto& rows = c["A"];
    Matrix A(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
    for (Index i = 0; i < A.rows(); ++i)
      for (Index j = 0; j < A.cols(); ++j) A(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Vector b(A.rows());
    for (Index i = 0; i < b.size(); ++i) b(i) = c["b"][static_cast<std::size_t>(i)];
    const double r = c["radius"];
    const auto sol = solve_l1_box(A, b, r);
    feasibility_agrees &= sol.feasible == c["feasible"].get<bool>();
    if (!sol.feasible) continue;
    worst_violation = std::max(worst_violation, oracle::box_violation(A, b, sol.x, r));
    worst_gap = std::max(worst_gap, std::abs(oracle::l1(sol.x) - c["objective"].get<double>()));
    ++cases;
  }
  bool identity = true;
  for (Index p : {2, 5, 10}) {
    const Matrix I = Matrix::Identity(p, p);
    identity &= clime(I, 0.0).omega == I;
    identity &= (clime(I, 0.3).omega - 0.7 * I).cwiseAbs().maxCoeff() <= 1e-15;
    identity &= dantzig(I, 0.0).omega == I && dantzig(I, 0.5).omega == I;
  }
  report(6,
         feasibility_agrees && worst_violation <= kLpFeasibility && worst_gap <= kLpObjective &&
             identity,
         fmt("%d CLIME/Dantzig column LPs (p<=10) vs HiGHS: max violation %.2e (limit %.0e), max "
             "objective gap %.2e (limit %.0e); S=I exact: %s",
             cases, worst_violation, kLpFeasibility, worst_gap, kLpObjective,
             identity ? "yes" : "no"));
}

void criterion_kendall() {
  std::mt19937_64 rng(7);
  double worst = 0;
  int datasets = 0;
  for (int k = 0; k < 200; ++k) {
    const Index n = 3 + static_cast<Index>(rng() % 298);
    const bool ties = k % 2 == 1;
    std::normal_distribution<double> z;
    Matrix m(n, 3);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < 3; ++j) m(i, j) = ties ? std::round(3 * z(rng)) : z(rng);
    bool constant = false;
    for (Index j = 0; j < 3; ++j) constant |= m.col(j).maxCoeff() == m.col(j).minCoeff();
    if (constant) m(0, 0) += 100, m(0, 1) += 100, m(0, 2) += 100;
    const Matrix t = kendall_tau_matrix(DataMatrix(m));
    for (Index a = 0; a < 3; ++a)
      for (Index b = a + 1; b < 3; ++b) {
        const std::span<const double> x(m.col(a).data(), static_cast<std::size_t>(n));
        const std::span<const double> y(m.col(b).data(), static_cast<std::size_t>(n));
        worst = std::max(worst, std::abs(t(a, b) - oracle::kendall_tau_b(x, y)));
      }
    ++datasets;
  }
  report(7, worst <= kKendallTol,
         fmt("merge-sort tau-b vs O(n^2) definition on %d datasets (n<=300, half with ties): max "
             "error %.2e (limit %.0e)",
             datasets, worst, kKendallTol));
}

void criterion_power_moment() {
  double worst = 0;
  std::string detail;
  for (double g : {1.0, 1.5, 2.5, 3.0}) {
    const double gap = std::abs(power_moment(g) - oracle::power_moment_quadrature(g));
    worst = std::max(worst, gap);
    detail += fmt(" m(%.1f)=%.12g", g, power_moment(g));
  }
  SimulationConfig sim;
  sim.p = 5;
  sim.n = 30;
  const auto ds = simulate_dataset(sim);
  const bool identity = power_transform(ds.data, 1.0).values() == ds.data.values();
  report(8, worst <= kQuadratureTol && identity,
         fmt("closed form vs quadrature max gap %.2e (limit %.0e); gamma=1 identity: %s;", worst,
             kQuadratureTol, identity ? "yes" : "no") +
             detail);
}

// ---------------------------------------------------------------------------

struct StarsCalibration {
  int within = 0;
  bool deterministic = true;
  std::size_t truth_edges = 0;
  std::size_t median_count = 0;
};

// Gaussian samples from the sparse ground truth (no contamination), one
// StARS run per seed with the default skeptic_tau + glasso pipeline.
StarsCalibration stars_calibration(double diagonal_boost, bool unit_variance) {
  StarsCalibration out;
  std::vector<std::size_t> counts;
  for (int run = 0; run < kStarsRuns; ++run) {
    SimulationConfig sim;
    sim.p = 20;
    sim.n = 200;
    sim.sparsity = 0.1;
    sim.contamination_r = 0.0;
    sim.power_gamma = 1.0;
    sim.diagonal_boost = diagonal_boost;
    sim.unit_variance = unit_variance;
    sim.seed = mix_seed(2024, run);
    const auto ds = simulate_dataset(sim);
    PipelineOptions opts;
    StarsSelection sel;
    sel.config.seed = mix_seed(sim.seed, 0x53544152);
    const auto a = run_pipeline(ds.data, opts, sel);
    if (run < 5) out.deterministic &= run_pipeline(ds.data, opts, sel).lambda == a.lambda;
    out.truth_edges = ds.truth.edges.size();
    const auto c = a.edges.size();
    counts.push_back(c);
    if (2 * c >= out.truth_edges && c <= 2 * out.truth_edges) ++out.within;
  }
  std::sort(counts.begin(), counts.end());
  out.median_count = counts[counts.size() / 2];
  return out;
}

void criterion_stars() {
  const auto r = stars_calibration(SimulationConfig{}.diagonal_boost, false);
  const double frac = static_cast<double>(r.within) / kStarsRuns;
  report(9, r.deterministic && frac >= kStarsPassFraction,
         fmt("fixed seed gives identical lambda*: %s; edge count within x2 of truth (%zu) in %d/%d "
             "runs (need %.0f%%); median count %zu",
             r.deterministic ? "yes" : "no", r.truth_edges, r.within, kStarsRuns,
             100 * kStarsPassFraction, r.median_count));
  const auto alt = stars_calibration(0.2, true);
  info(fmt("criterion 9 with unit-variance generator (boost 0.2): within x2 in %d/%d runs, "
           "median count %zu of %zu",
           alt.within, kStarsRuns, alt.median_count, alt.truth_edges));
}

// Prices from a two-factor model with skewed, heavy-tailed shocks. Writes
// `days` rows of prices for `tickers` series.
std::filesystem::path write_synthetic_prices(int tickers, int days, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::student_t_distribution<double> t3(3.0);
  auto shock = [&] {
    // Centered lognormal mixed with a t3 draw: right-skewed and heavy-tailed.
    return 0.7 * (std::exp(z(rng)) - std::exp(0.5)) + 0.3 * t3(rng);
  };
  std::vector<double> load1(tickers), load2(tickers);
  for (int j = 0; j < tickers; ++j) {
    load1[j] = 0.5 + 0.5 * std::uniform_real_distribution<double>()(rng);
    load2[j] = (j % 4 == 0 ? 0.8 : 0.0) * std::uniform_real_distribution<double>()(rng);
  }
  const auto path = std::filesystem::temp_directory_path() / "skewgm_acceptance_prices.csv";
  std::ofstream out(path);
  out << "date";
  for (int j = 0; j < tickers; ++j) out << ",T" << j;
  out << '\n';
  std::vector<double> price(tickers, 100.0);
  // Consecutive calendar days from 2020-01-01.
  const std::chrono::sys_days start = std::chrono::year{2020} / 1 / 1;
  out.precision(17);
  for (int d = 0; d <= days; ++d) {
    const std::chrono::year_month_day ymd{start + std::chrono::days{d}};
    out << fmt("%04d-%02u-%02u", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
               static_cast<unsigned>(ymd.day()));
    const double f1 = shock(), f2 = shock();
    for (int j = 0; j < tickers; ++j) {
      if (d > 0) price[j] *= std::exp(0.01 * (load1[j] * f1 + load2[j] * f2 + shock()));
      out << ',' << price[j];
    }
    out << '\n';
  }
  return path;
}

void criterion_returns_panel() {
  const int tickers = 150, days = 120;
  const auto path = write_synthetic_prices(tickers, days, 10);
  const auto panel = ingest_prices(path);
  NormalityConfig ncfg;
  ncfg.seed = 11;
  ncfg.replicates = 2000;
  const auto norm = normality_tests(panel, ncfg);
  // Level 0.05 is index 1 of the default levels.
  int rejected = 0;
  for (const auto& s : norm.series)
    rejected += !s.skipped && (s.lilliefors_p < 0.05 || s.jarque_bera_p < 0.05);
  const auto data = panel.data();
  const bool precondition = data.p() > data.n() && rejected == norm.tested && norm.tested == data.p();

  PipelineOptions base;
  base.estimator = Estimator::skeptic_tau;
  StarsSelection sel;
  sel.config.seed = 12;
  const auto sk = run_pipeline(data, base, sel);
  const double lam = sk.lambda;
  auto edges_at = [&](Estimator e) {
    PipelineOptions opts;
    opts.estimator = e;
    return run_pipeline(data, opts, FixedLambda{lam}).edges.size();
  };
  const auto snk = edges_at(Estimator::skew_skeptic_tau);
  const auto stk = edges_at(Estimator::skew_keptic);
  report(10, precondition && snk <= sk.edges.size() && stk <= sk.edges.size(),
         fmt("synthetic panel p=%d n=%d, normality rejected (5%%) for %d/%d series; at lambda=%.4f "
             "edges skeptic_tau %zu >= skew_skeptic_tau %zu, skew_keptic %zu",
             static_cast<int>(data.p()), static_cast<int>(data.n()), rejected, norm.tested, lam,
             sk.edges.size(), snk, stk));
  std::filesystem::remove(path);
}

}  // namespace

// Arguments, when given, restrict the run to those criterion numbers.
int main(int argc, char** argv) {
  std::vector<int> only;
  for (int k = 1; k < argc; ++k) only.push_back(std::atoi(argv[k]));
  struct Step {
    int id;
    void (*run)();
  };
  const Step steps[] = {{2, criterion_reduction},     {3, criterion_factor_algebra},
                        {5, criterion_glasso},        {6, criterion_lp},
                        {7, criterion_kendall},       {8, criterion_power_moment},
                        {9, criterion_stars},         {10, criterion_returns_panel},
                        {4, criterion_rate_scaling},  {1, criterion_table_cell}};
  for (const auto& s : steps) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.id) == only.end()) continue;
    try {
      s.run();
    } catch (const std::exception& e) {
      report(s.id, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
