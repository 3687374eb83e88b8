// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stochcond/kernels.hpp"
#include "stochcond/model.hpp"
#include "stochcond/observed.hpp"
#include "stochcond/random.hpp"

namespace stochcond {

// Summary of N Monte Carlo log-likelihood draws l_j = log p(y_j | x),
// y_j ~ D: sample mean m, unbiased variance s2 (N - 1 denominator), the
// observation count n of D as `scale`, and log p(x) as `offset` when the
// prior was requested. The log-likelihood estimate is offset + scale * m.
struct LogLikEstimate {
  double m = 0.0;
  double s2 = 0.0;
  std::size_t n = 0;
  double scale = 1.0;
  double offset = 0.0;
  // Key of the random stream that produced y_1..N; a second estimate from
  // the same key sees the same observations.
  std::uint64_t seed = 0;

  double log_value() const { return offset + scale * m; }
};

struct EstimateOptions {
  bool include_prior = false;
  Exec exec = Exec::serial;
};

// Unbiased estimate of log p(y ~ D | x) from N draws. The draws depend only
// on rng, so passing copies of one source to two states shares y_1..N.
LogLikEstimate estimate_loglik(const Model& model, std::span<const double> x, const ObservedDistribution& d,
                               std::size_t draws, RandomSource rng, EstimateOptions options = {});

// The same statistics from already computed draws l_j.
LogLikEstimate summarize_draws(std::span<const double> log_terms, double scale = 1.0, double offset = 0.0);

// log of the bias-adjusted likelihood offset + scale * m - scale^2 s2 / (2N).
// Throws InsufficientSamplesError for N < 2.
double log_bias_adjusted_lik(const LogLikEstimate& est);

// exp(m - s2 / 2N) for a single observation (scale 1, no offset); the
// general form is exp(log_bias_adjusted_lik(est)).
double bias_adjusted_lik(const LogLikEstimate& est);

// grad_x log p(x, y_1) for one draw y_1 ~ D, with the conditional term
// scaled by the observation count of D.
std::vector<double> estimate_grad_loglik(const Model& model, std::span<const double> x,
                                         const ObservedDistribution& d, RandomSource& rng);

struct GradEstimate {
  std::vector<double> mean;
  // Per-coordinate variance of `mean` itself (sample variance / batch);
  // zero when batch = 1 or the gradient is exact.
  std::vector<double> variance;
};

// Average of `batch` single-draw estimates together with its variance.
GradEstimate estimate_grad_loglik_batch(const Model& model, std::span<const double> x,
                                        const ObservedDistribution& d, std::size_t batch, RandomSource& rng);

// grad_x [log p(x) + n sum_y q(y) log p(y | x)] for finite-support D.
std::vector<double> exact_grad_loglik(const Model& model, std::span<const double> x,
                                      const ObservedDistribution& d);

}  // namespace stochcond
