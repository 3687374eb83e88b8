// Apache License, Version 2.0, refer to LICENSE.txt

#include <algorithm>
#include <cmath>

#include "stochcond/errors.hpp"
#include "stochcond/estimators.hpp"
#include "stochcond/inference.hpp"

namespace stochcond {

// Each draw resamples the momentum and runs `leapfrog_steps` SGHMC updates
// with unit mass:
//   v <- v - eps C v + eps g + N(0, 2 (C - B) eps),   x <- x + eps v,
// where g is the (stochastic) gradient of the log-joint and B = eps V / 2
// is the estimated gradient-noise term, V the variance of g.
ChainResult sghmc(const Model& model, const ObservedDistribution& d, const SghmcConfig& config,
                  RandomSource rng, std::span<const double> init) {
  if (config.draws == 0) throw ParameterError("sghmc: draws must be >= 1");
  if (!(config.step_size >= 0.0)) throw ParameterError("sghmc: step size must be >= 0");
  if (!(config.friction >= 0.0)) throw ParameterError("sghmc: friction must be >= 0");
  if (config.batch == 0) throw ParameterError("sghmc: batch must be >= 1");
  if (!model.differentiable()) throw NotDifferentiableError("sghmc needs a differentiable model");
  if (init.size() != model.dim()) throw ParameterError("sghmc: dimension mismatch");
  if (config.mode == GradientMode::exact && !d.has_finite_support()) {
    throw UnsupportedExactError("exact gradients need a finite-support observed distribution");
  }

  const std::size_t dim = model.dim();
  const double eps = config.step_size;
  const double friction = config.friction;
  ParamVector x(init.begin(), init.end());
  std::vector<double> v(dim);

  ChainResult result;
  result.burn_in = config.burn_in;
  result.draws.reserve(config.draws);
  const std::size_t total = config.burn_in + config.draws;
  for (std::size_t t = 0; t < total; ++t) {
    RandomSource step = rng.split(t);
    for (double& vi : v) vi = step.normal();
    for (std::size_t l = 0; l < config.leapfrog_steps; ++l) {
      GradEstimate g;
      if (config.mode == GradientMode::exact) {
        g.mean = exact_grad_loglik(model, x, d);
        g.variance.assign(dim, 0.0);
      } else {
        g = estimate_grad_loglik_batch(model, x, d, config.batch, step);
      }
      for (std::size_t i = 0; i < dim; ++i) {
        const double b_hat = config.noise_correction ? 0.5 * eps * g.variance[i] : 0.0;
        const double noise_var = std::max(0.0, 2.0 * (friction - b_hat) * eps);
        const double xi = step.normal();
        v[i] += -eps * friction * v[i] + eps * g.mean[i] + std::sqrt(noise_var) * xi;
        x[i] += eps * v[i];
        if (!std::isfinite(x[i]) || std::abs(x[i]) > config.divergence_bound) {
          throw DivergenceError("sghmc trajectory diverged", t);
        }
      }
    }
    if (t >= config.burn_in) result.draws.push_back(PosteriorSample{x, 1.0, t});
  }
  return result;
}

}  // namespace stochcond
