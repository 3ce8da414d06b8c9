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

#include "skewgm/skewfit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/students_t.hpp>

#include "nelder_mead.hpp"
#include "skewgm/parallel.hpp"

namespace skewgm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogTwo = std::numbers::ln2;
const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * kPi);

constexpr double kLikelihoodTol = 1e-8;
constexpr int kMaxIterations = 4000;

// log Phi(t), accurate far into the lower tail.
double log_normal_cdf(double t) {
  if (t > -35.0) return std::log(0.5 * std::erfc(-t / std::numbers::sqrt2));
  const double u = 1.0 / (t * t);
  const double series = 1.0 - u + 3.0 * u * u - 15.0 * u * u * u + 105.0 * u * u * u * u;
  return -0.5 * t * t - std::log(-t) - kLogSqrtTwoPi + std::log(series);
}

struct Moments {
  double mean = 0.0;
  double sd = 0.0;
  double skewness = 0.0;
};

Moments moments_of(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  Moments m;
  m.mean = mean;
  m.sd = std::sqrt(m2);
  m.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  return m;
}

// Skew-normal (location, scale) matching the first two moments for shape alpha.
std::pair<double, double> location_scale_for(double alpha, double mean, double sd) {
  const double delta = alpha / std::sqrt(1.0 + alpha * alpha);
  const double b = std::sqrt(2.0 / kPi);
  const double scale = sd / std::sqrt(1.0 - b * b * delta * delta);
  return {mean - scale * delta * b, scale};
}

std::vector<double> standardized(std::span<const double> x, const Moments& m) {
  std::vector<double> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - m.mean) / m.sd;
  return z;
}

// Fits are done on standardized data oriented to non-negative skewness,
// which makes negation and affine equivariance exact by construction.
struct Canonical {
  std::vector<double> z;
  Moments moments;
  double sign = 1.0;
};

Canonical canonicalize(std::span<const double> x) {
  Canonical c;
  c.moments = moments_of(x);
  if (!(c.moments.sd > 0.0)) throw Error("skewness fit: constant column");
  c.z = standardized(x, c.moments);
  if (c.moments.skewness < 0.0) {
    c.sign = -1.0;
    for (double& v : c.z) v = -v;
  }
  return c;
}

void restore(UnivariateSkewFit& fit, const Canonical& c) {
  fit.alpha *= c.sign;
  fit.diagnostics.location = c.moments.mean + c.moments.sd * c.sign * fit.diagnostics.location;
  fit.diagnostics.scale *= c.moments.sd;
  fit.diagnostics.log_likelihood -= static_cast<double>(c.z.size()) * std::log(c.moments.sd);
}

UnivariateSkewFit moments_fit(std::span<const double> x) {
  const Moments m = moments_of(x);
  UnivariateSkewFit fit;
  fit.alpha = alpha_from_skewness(m.skewness, &fit.diagnostics.clamped);
  const auto [loc, scale] = location_scale_for(fit.alpha, m.mean, m.sd > 0 ? m.sd : 1.0);
  fit.diagnostics.location = loc;
  fit.diagnostics.scale = scale;
  return fit;
}

double clamp_alpha(double a) { return std::clamp(a, -kAlphaCap, kAlphaCap); }

}  // namespace

std::string_view to_string(AlphaMethod m) {
  switch (m) {
    case AlphaMethod::moments:
      return "moments";
    case AlphaMethod::skew_normal_mle:
      return "skew_normal_mle";
    case AlphaMethod::skew_t_mle:
      return "skew_t_mle";
  }
  return "unknown";
}

SkewnessVector SkewnessVector::zeros(Index p) {
  SkewnessVector s;
  s.alpha = Vector::Zero(p);
  s.method = AlphaMethod::moments;
  s.diagnostics.resize(static_cast<std::size_t>(p));
  return s;
}

double skew_normal_skewness(double alpha) {
  const double delta = alpha / std::sqrt(1.0 + alpha * alpha);
  const double db = delta * std::sqrt(2.0 / kPi);
  return 0.5 * (4.0 - kPi) * db * db * db / std::pow(1.0 - db * db, 1.5);
}

double max_skewness_at_cap() {
  static const double value = skew_normal_skewness(kAlphaCap);
  return value;
}

double alpha_from_skewness(double g1, bool* clamped) {
  const double limit = max_skewness_at_cap();
  const bool clip = std::abs(g1) >= limit;
  if (clamped) *clamped = clip;
  if (clip) return std::copysign(kAlphaCap, g1);
  const double t = std::cbrt(std::abs(g1) / (0.5 * (4.0 - kPi)));
  const double db2 = t * t / (1.0 + t * t);  // (delta b)^2
  const double delta2 = db2 * kPi / 2.0;
  const double alpha = std::sqrt(delta2 / (1.0 - delta2));
  return std::copysign(std::min(alpha, kAlphaCap), g1);
}

double sample_skewness(std::span<const double> x) { return moments_of(x).skewness; }

SkewnessVector estimate_alpha_moments(const DataMatrix& data) {
  if (data.n() < 8) throw Error("estimate_alpha_moments: need n >= 8");
  SkewnessVector out;
  out.method = AlphaMethod::moments;
  out.alpha.resize(data.p());
  out.diagnostics.resize(static_cast<std::size_t>(data.p()));
  for (Index j = 0; j < data.p(); ++j) {
    const auto fit = moments_fit(data.column(j));
    out.alpha(j) = fit.alpha;
    out.diagnostics[static_cast<std::size_t>(j)] = fit.diagnostics;
  }
  return out;
}

double skew_normal_loglik(std::span<const double> x, double location, double scale,
                          double alpha) {
  if (!(scale > 0.0)) return -std::numeric_limits<double>::infinity();
  double ll = 0.0;
  for (double v : x) {
    const double z = (v - location) / scale;
    ll += -0.5 * z * z + log_normal_cdf(alpha * z);
  }
  const double n = static_cast<double>(x.size());
  return ll + n * (kLogTwo - kLogSqrtTwoPi - std::log(scale));
}

double skew_t_loglik(std::span<const double> x, double location, double scale, double alpha,
                     double dof) {
  if (!(scale > 0.0) || !(dof > 0.0)) return -std::numeric_limits<double>::infinity();
  const boost::math::students_t tail(dof + 1.0);
  const double log_norm = std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
                          0.5 * std::log(dof * kPi);
  double ll = 0.0;
  for (double v : x) {
    const double z = (v - location) / scale;
    const double w = alpha * z * std::sqrt((dof + 1.0) / (dof + z * z));
    const double tail_cdf = boost::math::cdf(tail, w);
    ll += -0.5 * (dof + 1.0) * std::log1p(z * z / dof) + std::log(std::max(tail_cdf, 1e-300));
  }
  const double n = static_cast<double>(x.size());
  return ll + n * (kLogTwo + log_norm - std::log(scale));
}

UnivariateSkewFit fit_skew_normal(std::span<const double> x) {
  const Canonical c = canonicalize(x);
  const UnivariateSkewFit start = moments_fit(c.z);

  auto negloglik = [&](const Eigen::VectorXd& th) {
    return -skew_normal_loglik(c.z, th(0), std::exp(th(1)), clamp_alpha(th(2)));
  };
  Eigen::VectorXd x0(3), step(3);
  x0 << start.diagnostics.location, std::log(start.diagnostics.scale), start.alpha;
  step << 0.1, 0.1, std::max(0.5, 0.2 * std::abs(start.alpha));
  const auto res = detail::nelder_mead(negloglik, x0, step, kLikelihoodTol, kMaxIterations);

  UnivariateSkewFit fit;
  if (!res.converged || !std::isfinite(res.value)) {
    fit = start;
    fit.diagnostics.converged = false;
    fit.diagnostics.fell_back = true;
    fit.diagnostics.log_likelihood = skew_normal_loglik(
        c.z, start.diagnostics.location, start.diagnostics.scale, start.alpha);
  } else {
    fit.alpha = clamp_alpha(res.x(2));
    fit.diagnostics.clamped = std::abs(res.x(2)) >= kAlphaCap;
    fit.diagnostics.location = res.x(0);
    fit.diagnostics.scale = std::exp(res.x(1));
    fit.diagnostics.log_likelihood = -res.value;
  }
  fit.diagnostics.iterations = res.iterations;
  restore(fit, c);
  return fit;
}

UnivariateSkewFit fit_skew_t(std::span<const double> x) {
  const Canonical c = canonicalize(x);
  const UnivariateSkewFit start = moments_fit(c.z);

  Eigen::VectorXd warm(3);
  warm << start.diagnostics.location, std::log(start.diagnostics.scale), start.alpha;
  UnivariateSkewFit best;
  bool have_best = false;
  int total_iterations = 0;
  bool all_converged = true;
  // Largest dof first: closest to the skew-normal start.
  for (auto it = kSkewTDofGrid.rbegin(); it != kSkewTDofGrid.rend(); ++it) {
    const double dof = *it;
    auto negloglik = [&](const Eigen::VectorXd& th) {
      return -skew_t_loglik(c.z, th(0), std::exp(th(1)), clamp_alpha(th(2)), dof);
    };
    Eigen::VectorXd step(3);
    step << 0.1, 0.1, std::max(0.5, 0.2 * std::abs(warm(2)));
    const auto res = detail::nelder_mead(negloglik, warm, step, kLikelihoodTol, kMaxIterations);
    total_iterations += res.iterations;
    if (!res.converged || !std::isfinite(res.value)) {
      all_converged = false;
      continue;
    }
    warm = res.x;
    if (!have_best || -res.value > best.diagnostics.log_likelihood) {
      have_best = true;
      best.alpha = clamp_alpha(res.x(2));
      best.diagnostics.clamped = std::abs(res.x(2)) >= kAlphaCap;
      best.diagnostics.location = res.x(0);
      best.diagnostics.scale = std::exp(res.x(1));
      best.diagnostics.log_likelihood = -res.value;
      best.diagnostics.dof = dof;
    }
  }
  if (!have_best) {
    best = start;
    best.diagnostics.fell_back = true;
    best.diagnostics.converged = false;
  } else {
    best.diagnostics.converged = all_converged;
  }
  best.diagnostics.iterations = total_iterations;
  restore(best, c);
  return best;
}

SkewnessVector estimate_alpha_mle(const DataMatrix& data, SkewFamily family) {
  if (data.n() < 20) throw Error("estimate_alpha_mle: need n >= 20");
  SkewnessVector out;
  out.method = family == SkewFamily::skew_normal ? AlphaMethod::skew_normal_mle
                                                  : AlphaMethod::skew_t_mle;
  out.alpha.resize(data.p());
  out.diagnostics.resize(static_cast<std::size_t>(data.p()));
  parallel_for(static_cast<std::size_t>(data.p()), [&](std::size_t j) {
    const auto col = data.column(static_cast<Index>(j));
    const auto fit = family == SkewFamily::skew_normal ? fit_skew_normal(col) : fit_skew_t(col);
    out.alpha(static_cast<Index>(j)) = fit.alpha;
    out.diagnostics[j] = fit.diagnostics;
  });
  return out;
}

}  // namespace skewgm
