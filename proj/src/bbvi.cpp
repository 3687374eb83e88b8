// Apache License, Version 2.0, refer to LICENSE.txt

#include <algorithm>
#include <cmath>

#include "stochcond/errors.hpp"
#include "stochcond/inference.hpp"
#include "stochcond/math.hpp"

namespace stochcond {

double log_q(const VariationalParams& lambda, std::span<const double> x) {
  double lq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lq += normal_lpdf(x[i], lambda.mean[i], std::exp(lambda.log_sd[i]));
  }
  return lq;
}

std::vector<double> elbo_score_gradient(const Model& model, const ObservedDistribution& d,
                                        const VariationalParams& lambda, std::size_t batch, RandomSource& rng) {
  if (batch == 0) throw ParameterError("bbvi: batch must be >= 1");
  const std::size_t dim = lambda.mean.size();
  std::vector<double> grad(2 * dim, 0.0);
  ParamVector x(dim);
  for (std::size_t s = 0; s < batch; ++s) {
    for (std::size_t i = 0; i < dim; ++i) x[i] = lambda.mean[i] + std::exp(lambda.log_sd[i]) * rng.normal();
    const std::vector<double> y = d.draw(rng);
    const double f = model.log_prior(x) + d.count() * model.log_cond(x, y) - log_q(lambda, x);
    for (std::size_t i = 0; i < dim; ++i) {
      const double inv_var = std::exp(-2.0 * lambda.log_sd[i]);
      const double diff = x[i] - lambda.mean[i];
      grad[i] += diff * inv_var * f;
      grad[dim + i] += (diff * diff * inv_var - 1.0) * f;
    }
  }
  for (double& g : grad) g /= static_cast<double>(batch);
  return grad;
}

double bbvi_step_size(const BbviConfig& config, std::size_t k, double s) {
  return config.eta * std::pow(static_cast<double>(k), -0.5 + 1e-16) / (config.tau + std::sqrt(s));
}

std::vector<VariationalParams> bbvi(const Model& model, const ObservedDistribution& d,
                                    const VariationalParams& init, const BbviConfig& config, RandomSource rng) {
  if (config.batch == 0) throw ParameterError("bbvi: batch must be >= 1");
  if (init.mean.size() != model.dim() || init.log_sd.size() != model.dim()) {
    throw ParameterError("bbvi: dimension mismatch");
  }
  const std::size_t dim = model.dim();
  std::vector<VariationalParams> trajectory{init};
  trajectory.reserve(config.iterations + 1);
  VariationalParams lambda = init;
  std::vector<double> s(2 * dim, 0.0);
  for (std::size_t k = 1; k <= config.iterations; ++k) {
    RandomSource step = rng.split(k);
    const std::vector<double> g = elbo_score_gradient(model, d, lambda, config.batch, step);
    for (std::size_t j = 0; j < 2 * dim; ++j) {
      s[j] = k == 1 ? g[j] * g[j] : config.alpha * g[j] * g[j] + (1.0 - config.alpha) * s[j];
      const double delta = bbvi_step_size(config, k, s[j]) * g[j];
      double& target = j < dim ? lambda.mean[j] : lambda.log_sd[j - dim];
      target += delta;
      if (!std::isfinite(target)) throw DivergenceError("bbvi parameters became non-finite", k);
    }
    trajectory.push_back(lambda);
  }
  return trajectory;
}

VariationalParams polyak_average(std::span<const VariationalParams> trajectory, double fraction) {
  if (trajectory.empty()) throw ParameterError("polyak_average: empty trajectory");
  const std::size_t n = trajectory.size();
  std::size_t start = n - std::max<std::size_t>(1, static_cast<std::size_t>(fraction * static_cast<double>(n)));
  VariationalParams avg{std::vector<double>(trajectory[0].mean.size(), 0.0),
                        std::vector<double>(trajectory[0].mean.size(), 0.0)};
  for (std::size_t t = start; t < n; ++t) {
    for (std::size_t i = 0; i < avg.mean.size(); ++i) {
      avg.mean[i] += trajectory[t].mean[i];
      avg.log_sd[i] += trajectory[t].log_sd[i];
    }
  }
  const double count = static_cast<double>(n - start);
  for (std::size_t i = 0; i < avg.mean.size(); ++i) {
    avg.mean[i] /= count;
    avg.log_sd[i] /= count;
  }
  return avg;
}

}  // namespace stochcond
