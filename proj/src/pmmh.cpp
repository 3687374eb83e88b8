// Apache License, Version 2.0, refer to LICENSE.txt

#include <algorithm>
#include <cmath>

#include "stochcond/errors.hpp"
#include "stochcond/estimators.hpp"
#include "stochcond/inference.hpp"
#include "stochcond/likelihood.hpp"
#include "stochcond/math.hpp"

namespace stochcond {

ParamVector GaussianRandomWalk::propose(std::span<const double> x, RandomSource& rng) const {
  ParamVector out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale_[i] * rng.normal();
  return out;
}

double GaussianRandomWalk::log_density(std::span<const double> to, std::span<const double> from) const {
  double lp = 0.0;
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (scale_[i] == 0.0) continue;  // degenerate coordinate: point mass at `from`
    lp += normal_lpdf(to[i], from[i], scale_[i]);
  }
  return lp;
}

void GaussianRandomWalk::adapt(double accept_prob, double target, std::size_t iteration) {
  const double gain = std::pow(static_cast<double>(iteration) + 1.0, -0.6);
  const double factor = std::exp(gain * (accept_prob - target));
  for (double& s : scale_) s *= factor;
}

double pmmh_log_accept_ratio(const LogLikEstimate& current, const LogLikEstimate& proposed,
                             double log_u_backward, double log_u_forward) {
  const double lp = log_bias_adjusted_lik(proposed);
  const double lc = log_bias_adjusted_lik(current);
  if (lp == kNegInf) return kNegInf;
  if (lc == kNegInf) return 0.0;
  return std::min(0.0, log_u_backward - log_u_forward + lp - lc);
}

ChainResult pmmh(const Model& model, const ObservedDistribution& d, GaussianRandomWalk kernel,
                 const PmmhConfig& config, RandomSource rng, std::span<const double> init) {
  if (config.draws == 0) throw ParameterError("pmmh: draws must be >= 1");
  if (!config.exact && config.n < 2) throw InsufficientSamplesError("bias adjustment needs N >= 2 draws");
  if (init.size() != model.dim() || kernel.scale().size() != model.dim()) {
    throw ParameterError("pmmh: dimension mismatch");
  }
  ParamVector x(init.begin(), init.end());
  if (!std::isfinite(model.log_prior(x))) throw ParameterError("pmmh: initial state outside prior support");

  const EstimateOptions opts{true, config.exec};
  const auto exact_target = [&](std::span<const double> p) {
    const double prior = model.log_prior(p);
    return prior == kNegInf ? kNegInf : prior + exact_stochastic_loglik(model, p, d);
  };
  double current_exact = config.exact ? exact_target(x) : 0.0;

  ChainResult result;
  result.burn_in = config.burn_in;
  result.draws.reserve(config.draws);
  std::size_t accepted = 0;
  const std::size_t total = config.burn_in + config.draws;
  for (std::size_t t = 0; t < total; ++t) {
    const RandomSource step = rng.split(t);
    RandomSource moves = step.split(1);
    const ParamVector proposal = kernel.propose(x, moves);
    double log_alpha = kNegInf;
    double proposal_exact = kNegInf;
    if (std::isfinite(model.log_prior(proposal))) {
      const double log_back = kernel.log_density(x, proposal);
      const double log_fwd = kernel.log_density(proposal, x);
      if (config.exact) {
        proposal_exact = exact_target(proposal);
        if (proposal_exact != kNegInf) {
          log_alpha = current_exact == kNegInf
                          ? 0.0
                          : std::min(0.0, log_back - log_fwd + proposal_exact - current_exact);
        }
      } else {
        // Both states see the same y_1..N.
        const RandomSource ys = step.split(0);
        const LogLikEstimate cur = estimate_loglik(model, x, d, config.n, ys, opts);
        const LogLikEstimate prop = estimate_loglik(model, proposal, d, config.n, ys, opts);
        log_alpha = pmmh_log_accept_ratio(cur, prop, log_back, log_fwd);
      }
    }
    const bool accept = log_alpha == 0.0 || std::log(moves.uniform()) < log_alpha;
    if (accept) {
      x = proposal;
      current_exact = proposal_exact;
    }
    if (t < config.burn_in) {
      if (config.adapt) kernel.adapt(std::exp(log_alpha), config.target_accept, t);
    } else {
      if (accept) ++accepted;
      result.draws.push_back(PosteriorSample{x, 1.0, t});
    }
  }
  result.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(config.draws);
  result.stuck = accepted == 0;
  return result;
}

}  // namespace stochcond
