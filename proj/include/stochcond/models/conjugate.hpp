// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <array>

#include "stochcond/math.hpp"
#include "stochcond/model.hpp"

namespace stochcond {

// p ~ Beta(alpha, beta), y | p ~ Bernoulli(p); latent x = logit p.
class BetaBernoulliModel : public AutodiffModel<BetaBernoulliModel, 1> {
 public:
  BetaBernoulliModel(double alpha = 1.0, double beta = 1.0);

  std::vector<std::string> param_names() const override { return {"p"}; }
  std::vector<Transform> transforms() const override { return {Transform::interval(0.0, 1.0)}; }

  template <class T>
  T prior(const std::array<T, 1>& x) const {
    return alpha_ * log_logistic(x[0]) + beta_ * log_logistic(T(-x[0])) - log_beta_fn_;
  }
  template <class T>
  T cond(const std::array<T, 1>& x, Observation y) const {
    return bernoulli_logit_lpmf(y[0] > 0.5 ? 1 : 0, x[0]);
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
  double log_beta_fn_;
};

// x ~ Normal(prior_mean, prior_sd), y | x ~ Normal(x, noise_sd).
class GaussianModel : public AutodiffModel<GaussianModel, 1> {
 public:
  GaussianModel(double prior_mean = 0.0, double prior_sd = 1.0, double noise_sd = 1.0);

  std::vector<std::string> param_names() const override { return {"x"}; }
  std::vector<Transform> transforms() const override { return {Transform::identity()}; }

  template <class T>
  T prior(const std::array<T, 1>& x) const {
    return normal_lpdf(prior_mean_, x[0], T(prior_sd_));
  }
  template <class T>
  T cond(const std::array<T, 1>& x, Observation y) const {
    return normal_lpdf(y[0], x[0], T(noise_sd_));
  }

  double prior_mean() const { return prior_mean_; }
  double prior_sd() const { return prior_sd_; }
  double noise_sd() const { return noise_sd_; }

 private:
  double prior_mean_;
  double prior_sd_;
  double noise_sd_;
};

}  // namespace stochcond
