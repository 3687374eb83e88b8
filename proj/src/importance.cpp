// Apache License, Version 2.0, refer to LICENSE.txt

#include <algorithm>
#include <cmath>

#include "stochcond/errors.hpp"
#include "stochcond/estimators.hpp"
#include "stochcond/inference.hpp"
#include "stochcond/math.hpp"

namespace stochcond {

ImportanceResult importance_sampling(const Model& model, const ObservedDistribution& d,
                                     std::span<const DistSpec> proposal, std::size_t particles,
                                     std::size_t draws_per_particle, RandomSource rng, Exec exec) {
  if (proposal.size() != model.dim()) throw ParameterError("proposal dimension does not match the model");
  if (particles == 0) throw ParameterError("importance sampling needs at least one particle");
  if (draws_per_particle < 2) throw InsufficientSamplesError("bias adjustment needs N >= 2 draws");
  for (const auto& p : proposal) validate(p);

  ImportanceResult result;
  result.particles.resize(particles);
  result.log_weights.resize(particles);
  kernels::map_indexed(
      result.log_weights,
      [&](std::size_t i) {
        RandomSource local = rng.split(i);
        ParamVector z(proposal.size());
        double log_u = 0.0;
        for (std::size_t k = 0; k < proposal.size(); ++k) {
          z[k] = sample(proposal[k], local);
          log_u += log_pdf(proposal[k], z[k]);
        }
        ParamVector x = model.unconstrain(z);
        result.particles[i] = PosteriorSample{x, 0.0, i};
        // Prior density with respect to the constrained coordinates u lives in.
        const double log_prior = model.log_prior(x) - model.log_jacobian(x);
        if (!std::isfinite(log_prior) || !std::isfinite(log_u)) return kNegInf;
        const LogLikEstimate est = estimate_loglik(model, x, d, draws_per_particle, local.split(1));
        return log_prior + log_bias_adjusted_lik(est) - log_u;
      },
      exec);

  double max_lw = kNegInf;
  for (double lw : result.log_weights) max_lw = std::max(max_lw, lw);
  if (max_lw == kNegInf || std::isnan(max_lw)) {
    throw DegenerateProposalError("all importance weights are zero");
  }
  double total = 0.0;
  for (double lw : result.log_weights) total += std::exp(lw - max_lw);
  for (std::size_t i = 0; i < particles; ++i) {
    result.particles[i].weight = std::exp(result.log_weights[i] - max_lw) / total;
  }
  return result;
}

}  // namespace stochcond
