// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/models/nypopu.hpp"

#include <cmath>

#include "stochcond/errors.hpp"

namespace stochcond {

PopulationSummary ny_population_summary(int sample) {
  const std::vector<double> levels{0.0, 0.05, 0.25, 0.5, 0.75, 0.95, 1.0};
  PopulationSummary s;
  std::vector<double> values;
  switch (sample) {
    case 0:
      s.total = 13776663;
      s.mean = 17135;
      s.sd = 139147;
      s.n = 804;
      values = {19, 336, 800, 1668, 5050, 30295, 2627319};
      break;
    case 1:
      s.total = 1966745;
      s.mean = 19667;
      s.sd = 142218;
      values = {164, 308, 891, 2081, 6049, 25130, 1424815};
      break;
    case 2:
      s.total = 3850502;
      s.mean = 38505;
      s.sd = 228625;
      values = {162, 315, 863, 1740, 5239, 41718, 1809578};
      break;
    default:
      throw ParameterError("population sample must be 0, 1 or 2");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) s.quantiles.push_back({levels[i], values[i]});
  return s;
}

LogNormalMoments lognormal_from_moments(double m, double s2) {
  if (!(m > 0.0 && s2 > 0.0)) throw ParameterError("lognormal moments need m > 0 and s2 > 0");
  const double sigma2 = std::log1p(s2 / (m * m));
  return {std::log(m) - 0.5 * sigma2, std::sqrt(sigma2)};
}

NyPopuModel::NyPopuModel(const PopulationSummary& summary)
    : mean_(summary.mean), prior_sd_(summary.sd / std::sqrt(static_cast<double>(summary.n))) {
  if (!(summary.mean > 0.0 && summary.sd > 0.0) || summary.n == 0) {
    throw ParameterError("population summary needs positive mean, sd and n");
  }
}

ObservedDistribution ny_observations(const PopulationSummary& summary) {
  return ObservedDistribution::parametric(piecewise_uniform_from_quantiles(summary.quantiles),
                                          static_cast<double>(summary.n));
}

namespace {

std::vector<double> predictive_pool(std::span<const PosteriorSample> posterior, RandomSource rng) {
  if (posterior.empty()) throw ParameterError("posterior_predictive_total: empty posterior");
  std::vector<double> pool(posterior.size());
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    const auto& x = posterior[i].x;
    const LogNormalMoments p = lognormal_from_moments(x[0], x[1]);
    pool[i] = sample(LogNormal{p.mu, p.sigma}, rng);
  }
  return pool;
}

double resample_total(std::span<const double> pool, std::size_t towns, RandomSource rng) {
  double total = 0.0;
  for (std::size_t k = 0; k < towns; ++k) total += pool[rng.index(pool.size())];
  return total;
}

}  // namespace

std::vector<double> posterior_predictive_total_serial(std::span<const PosteriorSample> posterior, std::size_t towns,
                                                      std::size_t reps, RandomSource rng) {
  return posterior_predictive_total(posterior, towns, reps, rng, Exec::serial);
}

std::vector<double> posterior_predictive_total_parallel(std::span<const PosteriorSample> posterior,
                                                        std::size_t towns, std::size_t reps, RandomSource rng) {
  return posterior_predictive_total(posterior, towns, reps, rng, Exec::parallel);
}

std::vector<double> posterior_predictive_total(std::span<const PosteriorSample> posterior, std::size_t towns,
                                               std::size_t reps, RandomSource rng, Exec exec) {
  const std::vector<double> pool = predictive_pool(posterior, rng.split(0));
  const RandomSource resampling = rng.split(1);
  std::vector<double> totals(reps);
  kernels::map_indexed(
      totals, [&](std::size_t r) { return resample_total(pool, towns, resampling.split(r)); }, exec);
  return totals;
}

}  // namespace stochcond
