// Apache License, Version 2.0, refer to LICENSE.txt

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <omp.h>

#include "stochcond/errors.hpp"
#include "stochcond/estimators.hpp"
#include "stochcond/gradients.hpp"
#include "stochcond/likelihood.hpp"
#include "stochcond/models/commute.hpp"
#include "stochcond/models/conjugate.hpp"
#include "stochcond/summary.hpp"

using namespace stochcond;

TEST(EstimateLoglik, SingleAtomSingleDraw) {
  GaussianModel m;
  const std::vector<double> x{0.3}, y{1.1};
  const auto est = estimate_loglik(m, x, ObservedDistribution::empirical({y}), 1, RandomSource(1));
  EXPECT_EQ(est.m, m.log_cond(x, y));
  EXPECT_EQ(est.n, 1u);
}

TEST(EstimateLoglik, WithinThreeStandardErrorsOfExact) {
  BetaBernoulliModel m;
  const auto d = ObservedDistribution::parametric(Bernoulli{0.6});
  const std::vector<double> x{logit(0.7)};
  const auto est = estimate_loglik(m, x, d, 100000, RandomSource(2));
  EXPECT_NEAR(est.m, exact_stochastic_loglik(m, x, d), 3 * std::sqrt(est.s2 / est.n));
}

TEST(EstimateLoglik, PriorFlagAddsOffset) {
  BetaBernoulliModel m(2, 3);
  const auto d = ObservedDistribution::parametric(Bernoulli{0.6});
  const std::vector<double> x{0.2};
  const auto without = estimate_loglik(m, x, d, 50, RandomSource(3));
  const auto with = estimate_loglik(m, x, d, 50, RandomSource(3), {true, Exec::serial});
  EXPECT_EQ(without.m, with.m);
  EXPECT_EQ(without.offset, 0.0);
  EXPECT_EQ(with.offset, m.log_prior(x));
}

TEST(EstimateLoglik, SubsamplingMatchesFullData) {
  GaussianModel m(0, 1, 2);
  RandomSource data(4);
  std::vector<std::vector<double>> stored;
  for (int i = 0; i < 1000; ++i) stored.push_back({1.0 + 2.0 * data.normal()});
  const auto d = ObservedDistribution::subsample(stored);
  const std::vector<double> x{0.5};
  double full = 0.0;
  for (const auto& y : stored) full += m.log_cond(x, y);
  std::vector<double> values;
  for (int r = 0; r < 200; ++r) {
    const auto est = estimate_loglik(m, x, d, 100, RandomSource(100 + r));
    EXPECT_EQ(est.scale, 1000.0);
    values.push_back(est.scale * est.m);
  }
  EXPECT_NEAR(mean(values), full, 3 * sd(values) / std::sqrt(200.0));
}

TEST(EstimateLoglik, UnbiasedOverReplications) {
  BetaBernoulliModel m;
  const std::vector<double> x{logit(0.35)};
  const std::vector<ObservedDistribution> fixtures{
      ObservedDistribution::parametric(Bernoulli{0.6}),
      ObservedDistribution::empirical({{0.0}, {1.0}, {1.0}}),
      ObservedDistribution::dirac({1.0}),
  };
  for (const auto& d : fixtures) {
    const double exact = exact_stochastic_loglik(m, x, d);
    std::vector<double> errors;
    for (int r = 0; r < 1000; ++r) errors.push_back(estimate_loglik(m, x, d, 10, RandomSource(r)).m - exact);
    const double se = errors.size() > 1 && sd(errors) > 0 ? sd(errors) / std::sqrt(1000.0) : 1e-300;
    EXPECT_LE(std::abs(mean(errors)), 4 * se + 1e-15);
  }
}

TEST(EstimateLoglik, SerialAndParallelAgree) {
  omp_set_num_threads(4);
  CommuteModel m(CommuteVariant::stochastic);
  RandomSource data(1);
  const auto d = commute_observations(CommuteVariant::stochastic, simulate_commute(30, 0.2, 0.8, 0.1, data));
  const std::vector<double> x{-1.0, 1.0, -2.0};
  const auto a = estimate_loglik(m, x, d, 257, RandomSource(9), {false, Exec::serial});
  const auto b = estimate_loglik(m, x, d, 257, RandomSource(9), {false, Exec::parallel});
  EXPECT_EQ(a.m, b.m);
  EXPECT_EQ(a.s2, b.s2);
}

TEST(BiasAdjusted, ConstantDrawsGiveExpM) {
  const std::vector<double> draws(10, -1.25);
  const auto est = summarize_draws(draws);
  EXPECT_EQ(est.s2, 0.0);
  EXPECT_EQ(bias_adjusted_lik(est), std::exp(-1.25));
}

TEST(BiasAdjusted, SingleDrawThrows) {
  const std::vector<double> draws{0.5};
  EXPECT_THROW(bias_adjusted_lik(summarize_draws(draws)), InsufficientSamplesError);
}

TEST(BiasAdjusted, LogNormalMeanIdentity) {
  const double mu0 = -0.7, sigma0 = 0.8;
  for (std::size_t n : {10u, 100u}) {
    RandomSource rng(n);
    double acc = 0.0;
    const int reps = 10000;
    for (int r = 0; r < reps; ++r) {
      std::vector<double> draws(n);
      for (double& v : draws) v = mu0 + sigma0 * rng.normal();
      acc += bias_adjusted_lik(summarize_draws(draws));
    }
    EXPECT_NEAR(acc / reps / std::exp(mu0), 1.0, 0.01) << "N = " << n;
  }
}

TEST(BiasAdjusted, PermutationInvariant) {
  std::vector<double> draws{0.1, -2.0, 0.7, 1.3, -0.4};
  const double a = bias_adjusted_lik(summarize_draws(draws));
  std::reverse(draws.begin(), draws.end());
  EXPECT_NEAR(bias_adjusted_lik(summarize_draws(draws)), a, 1e-15);
  LogLikEstimate e{0.3, 0.8, 5};
  LogLikEstimate f{0.3, 0.8, 5};
  EXPECT_EQ(bias_adjusted_lik(e), bias_adjusted_lik(f));
}

TEST(EstimateGrad, DiracEqualsGradLogJoint) {
  GaussianModel m(0, 1, 0.5);
  const std::vector<double> x{0.3}, y{1.4};
  RandomSource rng(1);
  EXPECT_EQ(estimate_grad_loglik(m, x, ObservedDistribution::dirac(y), rng), grad_log_joint(m, x, y).grad);
}

TEST(EstimateGrad, GaussianSourceAverage) {
  // x ~ N(0, 1), y | x ~ N(x, 1), D = N(2, 0.5): expected gradient -x + (2 - x).
  GaussianModel m;
  const auto d = ObservedDistribution::parametric(Normal{2.0, 0.5});
  const std::vector<double> x{0.4};
  RandomSource rng(2);
  std::vector<double> g;
  for (int i = 0; i < 100000; ++i) g.push_back(estimate_grad_loglik(m, x, d, rng)[0]);
  EXPECT_NEAR(mean(g), -0.4 + (2.0 - 0.4), 3 * sd(g) / std::sqrt(double(g.size())));
}

TEST(EstimateGrad, FiniteSupportMatchesExactSum) {
  CommuteModel m(CommuteVariant::stochastic);
  RandomSource data(5);
  const auto d = commute_observations(CommuteVariant::stochastic, simulate_commute(12, 0.3, 0.7, 0.2, data));
  const std::vector<double> x{-0.5, 0.8, -1.5};
  const std::vector<double> exact = exact_grad_loglik(m, x, d);
  RandomSource rng(6);
  std::vector<std::vector<double>> cols(3);
  for (int i = 0; i < 50000; ++i) {
    const auto g = estimate_grad_loglik(m, x, d, rng);
    for (int k = 0; k < 3; ++k) cols[k].push_back(g[k]);
  }
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(mean(cols[k]), exact[k], 3 * sd(cols[k]) / std::sqrt(50000.0)) << "coordinate " << k;
  }
}

TEST(EstimateGrad, BatchVarianceIsVarianceOfMean) {
  BetaBernoulliModel m;
  const auto d = ObservedDistribution::parametric(Bernoulli{0.6});
  const std::vector<double> x{0.1};
  RandomSource rng(7);
  const auto g = estimate_grad_loglik_batch(m, x, d, 400, rng);
  // Per-draw variance of the conditional score is q(1 - q) = 0.24.
  EXPECT_NEAR(g.variance[0] * 400, 0.24, 0.05);
}

TEST(EstimateGrad, FrozenSeedDeterministic) {
  BetaBernoulliModel m;
  const auto d = ObservedDistribution::parametric(Bernoulli{0.6});
  const std::vector<double> x{0.1};
  RandomSource a(11), b(11);
  EXPECT_EQ(estimate_grad_loglik(m, x, d, a), estimate_grad_loglik(m, x, d, b));
}
