// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "stochcond/distributions.hpp"
#include "stochcond/inference.hpp"
#include "stochcond/kernels.hpp"
#include "stochcond/math.hpp"
#include "stochcond/model.hpp"
#include "stochcond/observed.hpp"

namespace stochcond {

// Published summary of a sample of town populations.
struct PopulationSummary {
  double total = 0.0;
  double mean = 0.0;
  double sd = 0.0;
  std::size_t n = 100;
  std::vector<QuantilePoint> quantiles;  // lowest (0) through highest (1)
};

// Sample 1 or 2 of the 1960 New York State municipalities; 0 is the full
// population of 804 towns.
PopulationSummary ny_population_summary(int sample);
inline constexpr double kNyTrueTotal = 13776663.0;
inline constexpr std::size_t kNyTowns = 804;

// LogNormal parameters with mean m and variance s2.
struct LogNormalMoments {
  double mu;
  double sigma;
};
LogNormalMoments lognormal_from_moments(double m, double s2);

// Latents x0 = log m, x1 = log s2. m ~ Normal(mean, sd / sqrt(n)) restricted
// to m > 0; flat prior on log s2; y | m, s2 ~ LogNormal with matching
// moments.
class NyPopuModel : public AutodiffModel<NyPopuModel, 2> {
 public:
  explicit NyPopuModel(const PopulationSummary& summary);

  std::vector<std::string> param_names() const override { return {"m", "s2"}; }
  std::vector<Transform> transforms() const override { return {Transform::positive(), Transform::positive()}; }

  template <class T>
  T prior(const std::array<T, 2>& x) const {
    using std::exp;
    const T z = (exp(x[0]) - mean_) / prior_sd_;
    return -kHalfLog2Pi - std::log(prior_sd_) - 0.5 * z * z + x[0];
  }
  template <class T>
  T cond(const std::array<T, 2>& x, Observation y) const {
    using std::sqrt;
    const T sigma2 = softplus(T(x[1] - 2.0 * x[0]));
    return lognormal_lpdf(y[0], T(x[0] - 0.5 * sigma2), sqrt(sigma2));
  }

 private:
  double mean_;
  double prior_sd_;
};

// Conditioning object: piecewise-uniform over the summary quantiles with
// count n.
ObservedDistribution ny_observations(const PopulationSummary& summary);

// Predictive totals over `towns` municipalities. A pool holds one
// LogNormal predictive draw per posterior sample (constrained m, s2); each
// total sums `towns` draws from the pool with replacement.
std::vector<double> posterior_predictive_total_serial(std::span<const PosteriorSample> posterior, std::size_t towns,
                                                      std::size_t reps, RandomSource rng);
std::vector<double> posterior_predictive_total_parallel(std::span<const PosteriorSample> posterior,
                                                        std::size_t towns, std::size_t reps, RandomSource rng);
std::vector<double> posterior_predictive_total(std::span<const PosteriorSample> posterior, std::size_t towns,
                                               std::size_t reps, RandomSource rng, Exec exec = Exec::serial);

}  // namespace stochcond
