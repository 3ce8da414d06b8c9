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

#include "skewgm/pipeline.hpp"

#include <string>

#include "skewgm/rankcorr.hpp"

namespace skewgm {
namespace {

template <class Fn>
auto with_context(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DegenerateColumnError&) {
    throw;
  } catch (const std::exception& e) {
    const std::string what = e.what();
    if (what.starts_with("pipeline/")) throw;
    throw Error("pipeline/" + std::string(stage) + ": " + what);
  }
}

CorrelationEstimate base_estimate(const DataMatrix& data, Estimator e) {
  switch (e) {
    case Estimator::pearson:
      return pearson_correlation(data);
    case Estimator::skeptic_rho:
    case Estimator::skew_skeptic_rho:
      return skeptic_from_rho(spearman_rho_matrix(data));
    case Estimator::skeptic_tau:
    case Estimator::skew_skeptic_tau:
    case Estimator::skew_keptic:
      return skeptic_from_tau(kendall_tau_matrix(data));
  }
  throw Error("unknown estimator");
}

}  // namespace

std::string_view to_string(Estimator e) {
  switch (e) {
    case Estimator::pearson:
      return "pearson";
    case Estimator::skeptic_rho:
      return "skeptic_rho";
    case Estimator::skeptic_tau:
      return "skeptic_tau";
    case Estimator::skew_skeptic_rho:
      return "skew_skeptic_rho";
    case Estimator::skew_skeptic_tau:
      return "skew_skeptic_tau";
    case Estimator::skew_keptic:
      return "skew_keptic";
  }
  return "unknown";
}

Estimator estimator_from_string(std::string_view name) {
  for (Estimator e : kAllEstimators) {
    if (to_string(e) == name) return e;
  }
  throw Error("unknown estimator '" + std::string(name) + "'");
}

Shrinkage shrinkage_from_string(std::string_view name) {
  for (Shrinkage s : {Shrinkage::glasso, Shrinkage::clime, Shrinkage::dantzig}) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown shrinkage '" + std::string(name) + "'");
}

AlphaMethod alpha_method_from_string(std::string_view name) {
  for (AlphaMethod m :
       {AlphaMethod::moments, AlphaMethod::skew_normal_mle, AlphaMethod::skew_t_mle}) {
    if (to_string(m) == name) return m;
  }
  throw Error("unknown alpha method '" + std::string(name) + "'");
}

bool uses_skewness(Estimator e) {
  return e == Estimator::skew_skeptic_rho || e == Estimator::skew_skeptic_tau ||
         e == Estimator::skew_keptic;
}

AlphaMethod default_alpha_method(Estimator e) {
  return e == Estimator::skew_keptic ? AlphaMethod::skew_t_mle : AlphaMethod::skew_normal_mle;
}

SkewnessVector estimate_alpha(const DataMatrix& data, AlphaMethod method) {
  switch (method) {
    case AlphaMethod::moments:
      return estimate_alpha_moments(data);
    case AlphaMethod::skew_normal_mle:
      return estimate_alpha_mle(data, SkewFamily::skew_normal);
    case AlphaMethod::skew_t_mle:
      return estimate_alpha_mle(data, SkewFamily::skew_t);
  }
  throw Error("unknown alpha method");
}

CorrelationStage estimate_correlation(const DataMatrix& data, const PipelineOptions& opts,
                                      const SkewnessVector* fixed_alpha) {
  CorrelationStage stage;
  stage.raw = with_context("correlation", [&] { return base_estimate(data, opts.estimator); });
  if (uses_skewness(opts.estimator)) {
    if (fixed_alpha != nullptr) {
      stage.alpha = *fixed_alpha;
    } else {
      const AlphaMethod method = opts.alpha_method.value_or(default_alpha_method(opts.estimator));
      stage.alpha = with_context("skewfit", [&] { return estimate_alpha(data, method); });
    }
    stage.raw = with_context("skew_correction",
                             [&] { return apply_skew_correction(stage.raw, *stage.alpha); });
  }
  if (opts.shrinkage == Shrinkage::glasso) {
    stage.correlation =
        with_context("psd_repair", [&] { return psd_repair(stage.raw, opts.eig_floor); });
  } else {
    stage.correlation = stage.raw;
  }
  return stage;
}

PrecisionEstimate estimate_precision(const CorrelationEstimate& S, double lambda,
                                     const PipelineOptions& opts) {
  return with_context(to_string(opts.shrinkage).data(), [&] {
    switch (opts.shrinkage) {
      case Shrinkage::glasso:
        return glasso(S, lambda, opts.glasso);
      case Shrinkage::clime:
        return clime(S, lambda, opts.lp_tol);
      case Shrinkage::dantzig:
        return dantzig(S, lambda, opts.lp_tol);
    }
    throw Error("unknown shrinkage");
  });
}

std::vector<EdgeSet> edge_path(const CorrelationEstimate& S, std::span<const double> lambdas,
                               const PipelineOptions& opts) {
  std::vector<EdgeSet> out;
  out.reserve(lambdas.size());
  if (opts.shrinkage == Shrinkage::glasso) {
    const auto path =
        with_context("glasso", [&] { return glasso_path(S.matrix, lambdas, opts.glasso); });
    for (const auto& est : path) out.push_back(edges_from_precision(est, opts.zero_tol));
    return out;
  }
  for (double lambda : lambdas) {
    out.push_back(edges_from_precision(estimate_precision(S, lambda, opts), opts.zero_tol));
  }
  return out;
}

EdgePathFn make_edge_path_fn(const PipelineOptions& opts,
                             std::optional<SkewnessVector> fixed_alpha) {
  return [opts, fixed_alpha = std::move(fixed_alpha)](const DataMatrix& sub,
                                                      std::span<const double> lambdas) {
    const CorrelationStage stage =
        estimate_correlation(sub, opts, fixed_alpha ? &*fixed_alpha : nullptr);
    return edge_path(stage.correlation, lambdas, opts);
  };
}

PipelineResult run_pipeline(const DataMatrix& data, const PipelineOptions& opts,
                            const Selection& selection) {
  PipelineResult result;
  result.stage = estimate_correlation(data, opts);

  if (const auto* fixed = std::get_if<FixedLambda>(&selection)) {
    result.lambda = fixed->lambda;
  } else {
    const auto& stars = std::get<StarsSelection>(selection);
    StarsConfig cfg = stars.config;
    if (cfg.lambda_grid.empty()) {
      cfg.lambda_grid = log_lambda_grid(result.stage.correlation.matrix, stars.grid_size,
                                        stars.grid_min_ratio);
    }
    std::optional<SkewnessVector> fixed_alpha;
    if (!stars.refit_alpha) fixed_alpha = result.stage.alpha;
    const EdgePathFn fn = make_edge_path_fn(opts, std::move(fixed_alpha));
    result.stars = with_context("stars", [&] { return stars_select(data, fn, cfg); });
    result.lambda = result.stars->lambda_star;
  }

  result.precision = estimate_precision(result.stage.correlation, result.lambda, opts);
  result.edges = edges_from_precision(result.precision, opts.zero_tol);
  return result;
}

}  // namespace skewgm
