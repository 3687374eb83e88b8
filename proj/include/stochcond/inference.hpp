// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stochcond/distributions.hpp"
#include "stochcond/estimators.hpp"
#include "stochcond/kernels.hpp"
#include "stochcond/model.hpp"
#include "stochcond/observed.hpp"
#include "stochcond/random.hpp"

namespace stochcond {

struct PosteriorSample {
  ParamVector x;
  double weight = 1.0;
  std::size_t iteration = 0;
};

struct ChainResult {
  std::vector<PosteriorSample> draws;  // post burn-in, exactly the requested count
  std::size_t burn_in = 0;
  double acceptance_rate = 1.0;
  // Set when no proposal was accepted after burn-in.
  bool stuck = false;
};

// ---------------------------------------------------------------------------
// Importance sampling

struct ImportanceResult {
  std::vector<PosteriorSample> particles;  // weight = normalized weight
  std::vector<double> log_weights;         // unnormalized log w_i
};

// Particles drawn from a product proposal over the constrained parameters,
// weighted by w_i = exp(m_i - s_i^2 / 2N) p(x_i) / u(x_i).
ImportanceResult importance_sampling(const Model& model, const ObservedDistribution& d,
                                     std::span<const DistSpec> proposal, std::size_t particles,
                                     std::size_t draws_per_particle, RandomSource rng,
                                     Exec exec = Exec::serial);

// ---------------------------------------------------------------------------
// Pseudo-marginal Metropolis-Hastings

class GaussianRandomWalk {
 public:
  explicit GaussianRandomWalk(std::vector<double> scale) : scale_(std::move(scale)) {}

  ParamVector propose(std::span<const double> x, RandomSource& rng) const;
  // log u(to | from); symmetric.
  double log_density(std::span<const double> to, std::span<const double> from) const;
  // Robbins-Monro step on the log scale towards the target acceptance.
  void adapt(double accept_prob, double target, std::size_t iteration);

  const std::vector<double>& scale() const { return scale_; }

 private:
  std::vector<double> scale_;
};

struct PmmhConfig {
  std::size_t draws = 10000;
  std::size_t burn_in = 2000;
  std::size_t n = 32;     // observations drawn per likelihood estimate
  bool exact = false;     // use the exact likelihood (finite-support D)
  bool adapt = true;      // scale adaptation, burn-in only
  double target_accept = 0.3;
  Exec exec = Exec::serial;
};

// log alpha-hat = log u(x|x') - log u(x'|x) + [offset' + m' - s'^2/2N]
//                 - [offset + m - s^2/2N], with the estimates' scales.
double pmmh_log_accept_ratio(const LogLikEstimate& current, const LogLikEstimate& proposed,
                             double log_u_backward, double log_u_forward);

ChainResult pmmh(const Model& model, const ObservedDistribution& d, GaussianRandomWalk kernel,
                 const PmmhConfig& config, RandomSource rng, std::span<const double> init);

// ---------------------------------------------------------------------------
// Stochastic-gradient HMC

enum class GradientMode { stochastic, exact };

struct SghmcConfig {
  std::size_t draws = 10000;
  std::size_t burn_in = 2000;
  double step_size = 0.05;
  double friction = 1.0;
  std::size_t leapfrog_steps = 10;
  std::size_t batch = 1;  // single-draw gradients averaged per step
  GradientMode mode = GradientMode::stochastic;
  // Subtract the estimated gradient-noise variance from the injected noise.
  bool noise_correction = true;
  double divergence_bound = 1e6;
};

ChainResult sghmc(const Model& model, const ObservedDistribution& d, const SghmcConfig& config,
                  RandomSource rng, std::span<const double> init);

// ---------------------------------------------------------------------------
// Black-box variational inference

// Mean-field Gaussian over the unconstrained latents.
struct VariationalParams {
  std::vector<double> mean;
  std::vector<double> log_sd;
};

struct BbviConfig {
  std::size_t iterations = 2000;
  std::size_t batch = 16;
  // rho_k = eta * k^(-1/2 + 1e-16) / (tau + sqrt(s_k)),
  // s_k = alpha g_k^2 + (1 - alpha) s_{k-1}, s_1 = g_1^2.
  double eta = 0.1;
  double tau = 1.0;
  double alpha = 0.1;
};

double bbvi_step_size(const BbviConfig& config, std::size_t k, double s);

// Score-function estimate of grad_lambda ELBO, ordered (means..., log_sds...).
std::vector<double> elbo_score_gradient(const Model& model, const ObservedDistribution& d,
                                        const VariationalParams& lambda, std::size_t batch, RandomSource& rng);

double log_q(const VariationalParams& lambda, std::span<const double> x);

// Returns the parameter trajectory, init first.
std::vector<VariationalParams> bbvi(const Model& model, const ObservedDistribution& d,
                                    const VariationalParams& init, const BbviConfig& config, RandomSource rng);

// Coordinate-wise average of the last `fraction` of a trajectory.
VariationalParams polyak_average(std::span<const VariationalParams> trajectory, double fraction = 0.5);

}  // namespace stochcond
