// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stochcond/errors.hpp"
#include "stochcond/gradients.hpp"

namespace stochcond {

LogLikEstimate summarize_draws(std::span<const double> log_terms, double scale, double offset) {
  LogLikEstimate est;
  est.n = log_terms.size();
  est.scale = scale;
  est.offset = offset;
  if (est.n == 0) throw InsufficientSamplesError("estimate needs at least one draw");
  est.m = kernels::ordered_sum(log_terms) / static_cast<double>(est.n);
  if (!std::isfinite(est.m)) {
    est.m = -std::numeric_limits<double>::infinity();
    return est;
  }
  if (est.n > 1) {
    double ss = 0.0;
    for (double l : log_terms) ss += (l - est.m) * (l - est.m);
    est.s2 = ss / static_cast<double>(est.n - 1);
  }
  return est;
}

LogLikEstimate estimate_loglik(const Model& model, std::span<const double> x, const ObservedDistribution& d,
                               std::size_t draws, RandomSource rng, EstimateOptions options) {
  if (draws == 0) throw InsufficientSamplesError("estimate needs at least one draw");
  const std::uint64_t key = rng.key();
  std::vector<std::vector<double>> ys(draws);
  for (auto& y : ys) y = d.draw(rng);
  std::vector<double> terms(draws);
  kernels::log_cond_batch(model, x, ys, terms, options.exec);
  const double offset = options.include_prior ? model.log_prior(x) : 0.0;
  LogLikEstimate est = summarize_draws(terms, d.count(), offset);
  est.seed = key;
  return est;
}

double log_bias_adjusted_lik(const LogLikEstimate& est) {
  if (est.n < 2) throw InsufficientSamplesError("bias adjustment needs N >= 2 draws");
  if (!std::isfinite(est.m) || !std::isfinite(est.offset)) return -std::numeric_limits<double>::infinity();
  return est.offset + est.scale * est.m - est.scale * est.scale * est.s2 / (2.0 * static_cast<double>(est.n));
}

double bias_adjusted_lik(const LogLikEstimate& est) { return std::exp(log_bias_adjusted_lik(est)); }

std::vector<double> estimate_grad_loglik(const Model& model, std::span<const double> x,
                                         const ObservedDistribution& d, RandomSource& rng) {
  const std::vector<double> y = d.draw(rng);
  if (d.count() == 1.0) return grad_log_joint(model, x, y).grad;
  GradResult g = model.grad_log_prior(x);
  const GradResult c = model.grad_log_cond(x, y);
  for (std::size_t i = 0; i < g.grad.size(); ++i) g.grad[i] += d.count() * c.grad[i];
  return g.grad;
}

GradEstimate estimate_grad_loglik_batch(const Model& model, std::span<const double> x,
                                        const ObservedDistribution& d, std::size_t batch, RandomSource& rng) {
  if (batch == 0) throw ParameterError("gradient batch must be >= 1");
  const std::size_t dim = x.size();
  GradEstimate est{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
  std::vector<double> sq(dim, 0.0);
  for (std::size_t b = 0; b < batch; ++b) {
    const auto g = estimate_grad_loglik(model, x, d, rng);
    for (std::size_t i = 0; i < dim; ++i) {
      est.mean[i] += g[i];
      sq[i] += g[i] * g[i];
    }
  }
  const double nb = static_cast<double>(batch);
  for (std::size_t i = 0; i < dim; ++i) {
    est.mean[i] /= nb;
    if (batch > 1) {
      const double var = (sq[i] - nb * est.mean[i] * est.mean[i]) / (nb - 1.0);
      est.variance[i] = std::max(var, 0.0) / nb;
    }
  }
  return est;
}

std::vector<double> exact_grad_loglik(const Model& model, std::span<const double> x,
                                      const ObservedDistribution& d) {
  GradResult g = model.grad_log_prior(x);
  std::vector<double> acc(x.size(), 0.0);
  d.for_each_atom([&](double q, std::span<const double> y) {
    const GradResult c = model.grad_log_cond(x, y);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += q * c.grad[i];
  });
  for (std::size_t i = 0; i < acc.size(); ++i) g.grad[i] += d.count() * acc[i];
  return g.grad;
}

}  // namespace stochcond
