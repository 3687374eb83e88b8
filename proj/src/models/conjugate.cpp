// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/models/conjugate.hpp"

#include <cmath>

#include "stochcond/errors.hpp"

namespace stochcond {

BetaBernoulliModel::BetaBernoulliModel(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0 && beta > 0.0)) throw ParameterError("Beta prior needs alpha, beta > 0");
  log_beta_fn_ = std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta);
}

GaussianModel::GaussianModel(double prior_mean, double prior_sd, double noise_sd)
    : prior_mean_(prior_mean), prior_sd_(prior_sd), noise_sd_(noise_sd) {
  if (!(prior_sd > 0.0 && noise_sd > 0.0)) throw ParameterError("Gaussian model needs positive sds");
}

}  // namespace stochcond
