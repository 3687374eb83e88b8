// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/models/commute.hpp"

#include "stochcond/errors.hpp"

namespace stochcond {

CommuteData simulate_commute(std::size_t days, double p_r, double p_t, double p_f, RandomSource& rng) {
  if (days == 0) throw ParameterError("simulate_commute: days must be >= 1");
  for (double p : {p_r, p_t, p_f}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("simulate_commute: probabilities must lie in [0, 1]");
  }
  CommuteData data;
  for (std::size_t day = 0; day < days; ++day) {
    // Fixed number of draws per day keeps days aligned across settings.
    const double u_rain = rng.uniform();
    const double u_will = rng.uniform();
    const double u_intensity = rng.uniform();
    const double z = rng.normal();
    const int rain = u_rain < p_r;
    const int will = u_will < (rain ? p_t : p_f);
    const double intensity = rain ? u_intensity : 0.0;
    double d, di;
    if (will) {
      d = di = 30.0 + 4.0 * z;
    } else if (!rain) {
      d = di = 15.0 + 2.0 * z;
    } else {
      d = 60.0 + 8.0 * z;
      di = 30.0 + 30.0 * intensity + 8.0 * z;
    }
    data.rain.push_back(rain);
    data.will_rain.push_back(will);
    data.intensity.push_back(intensity);
    data.duration.push_back(d);
    data.duration_intensity.push_back(di);
  }
  return data;
}

CommuteVariant parse_commute_variant(const std::string& name) {
  if (name == "deterministic") return CommuteVariant::deterministic;
  if (name == "averaged") return CommuteVariant::averaged;
  if (name == "stochastic") return CommuteVariant::stochastic;
  if (name == "intensity") return CommuteVariant::intensity;
  throw ParameterError("unknown commute variant '" + name + "'");
}

std::string to_string(CommuteVariant v) {
  switch (v) {
    case CommuteVariant::deterministic:
      return "deterministic";
    case CommuteVariant::averaged:
      return "averaged";
    case CommuteVariant::stochastic:
      return "stochastic";
    default:
      return "intensity";
  }
}

ObservedDistribution commute_observations(CommuteVariant variant, const CommuteData& data) {
  const std::size_t n = data.days();
  const double count = static_cast<double>(n);
  switch (variant) {
    case CommuteVariant::deterministic: {
      std::vector<std::vector<double>> pairs;
      for (std::size_t i = 0; i < n; ++i) pairs.push_back({double(data.rain[i]), data.duration[i]});
      return ObservedDistribution::empirical(std::move(pairs), count);
    }
    case CommuteVariant::averaged: {
      double q = 0.0;
      for (int r : data.rain) q += r;
      q /= count;
      std::vector<std::vector<double>> obs;
      for (double d : data.duration) obs.push_back({q, d});
      return ObservedDistribution::empirical(std::move(obs), count);
    }
    case CommuteVariant::stochastic: {
      std::vector<std::vector<double>> rains, durations;
      for (std::size_t i = 0; i < n; ++i) {
        rains.push_back({double(data.rain[i])});
        durations.push_back({data.duration[i]});
      }
      return ObservedDistribution::product({std::move(rains), std::move(durations)}, count);
    }
    default: {
      std::vector<std::vector<double>> weather, durations;
      for (std::size_t i = 0; i < n; ++i) {
        weather.push_back({double(data.rain[i]), data.intensity[i]});
        durations.push_back({data.duration_intensity[i]});
      }
      return ObservedDistribution::product({std::move(weather), std::move(durations)}, count);
    }
  }
}

}  // namespace stochcond
