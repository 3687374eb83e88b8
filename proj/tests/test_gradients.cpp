// Apache License, Version 2.0, refer to LICENSE.txt

#include <gtest/gtest.h>

#include <cmath>

#include "stochcond/errors.hpp"
#include "stochcond/gradients.hpp"
#include "stochcond/models/commute.hpp"
#include "stochcond/models/conjugate.hpp"
#include "stochcond/models/nypopu.hpp"
#include "test_util.hpp"

using namespace stochcond;

TEST(GradLogJoint, Quadratic) {
  fixtures::QuadraticModel m;
  const std::vector<double> x{1.0}, y{0.0};
  const GradResult g = grad_log_joint(m, x, y);
  EXPECT_DOUBLE_EQ(g.value, -0.5);
  EXPECT_DOUBLE_EQ(g.grad[0], -1.0);
}

TEST(GradLogJoint, BetaBernoulliMatchesFiniteDifferences) {
  BetaBernoulliModel m(1.0, 1.0);
  const std::vector<double> y{1.0};
  for (double t : {-2.0, -0.3, 0.0, 0.8, 2.5}) {
    const std::vector<double> x{t};
    const GradResult g = grad_log_joint(m, x, y);
    // d/dt [log s(t) + log s(t) + log s(-t)] = 2 (1 - s(t)) - s(t)
    const double s = 1.0 / (1.0 + std::exp(-t));
    EXPECT_NEAR(g.grad[0], 2.0 * (1.0 - s) - s, 1e-12);
    EXPECT_LT(finite_difference_check(m, x, y), 1e-6);
  }
}

TEST(GradLogJoint, GaussianDiracScore) {
  GaussianModel m(0.5, 2.0, 0.7);
  const std::vector<double> y{1.3};
  for (double t : {-1.0, 0.0, 2.0}) {
    const std::vector<double> x{t};
    const double expected = -(t - 0.5) / 4.0 + (1.3 - t) / 0.49;
    EXPECT_NEAR(grad_log_joint(m, x, y).grad[0], expected, 1e-10);
  }
}

TEST(GradLogJoint, NonFiniteValueFlagged) {
  NyPopuModel m(ny_population_summary(1));
  const std::vector<double> x{std::log(19667.0), 2 * std::log(142218.0)}, y{0.0};
  const GradResult g = grad_log_joint(m, x, y);
  EXPECT_EQ(g.value, -INFINITY);
  EXPECT_EQ(g.grad[0], 0.0);
  EXPECT_EQ(g.grad[1], 0.0);
  // Outside the support the checker reports an infinite error.
  EXPECT_EQ(finite_difference_check(m, x, y), INFINITY);
}

TEST(FiniteDifferenceCheck, QuadraticIsExact) {
  fixtures::QuadraticModel m;
  const std::vector<double> x{0.37}, y{0.0};
  EXPECT_LT(finite_difference_check(m, x, y, 1e-5), 1e-8);
}

TEST(FiniteDifferenceCheck, CommuteInteriorPoint) {
  CommuteModel m(CommuteVariant::deterministic);
  RandomSource rng(3);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x{rng.normal(), rng.normal(), rng.normal()};
    const std::vector<double> y{double(i % 2), 10.0 + 50.0 * rng.uniform()};
    EXPECT_LT(finite_difference_check(m, x, y, 1e-5), 1e-5);
  }
}

TEST(FiniteDifferenceCheck, RejectsNonPositiveStep) {
  fixtures::QuadraticModel m;
  const std::vector<double> x{0.0}, y{0.0};
  EXPECT_THROW(finite_difference_check(m, x, y, 0.0), ParameterError);
}

TEST(Transforms, ConstrainRoundTrip) {
  CommuteModel m(CommuteVariant::stochastic);
  const std::vector<double> z{0.2, 0.5, 0.9};
  const ParamVector x = m.unconstrain(z);
  const ParamVector back = m.constrain(x);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(back[i], z[i], 1e-14);
}
