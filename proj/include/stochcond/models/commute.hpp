// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <array>
#include <string>
#include <vector>

#include "stochcond/math.hpp"
#include "stochcond/model.hpp"
#include "stochcond/observed.hpp"
#include "stochcond/random.hpp"

namespace stochcond {

// One simulated day per index. Intensity is drawn on every rainy day (0 on
// dry days); `duration` follows the plain model and `duration_intensity`
// the variant where a rainy motorcycle ride takes Normal(30 + 30 I, 8),
// both from the same draws.
struct CommuteData {
  std::vector<int> rain;
  std::vector<int> will_rain;
  std::vector<double> intensity;
  std::vector<double> duration;
  std::vector<double> duration_intensity;

  std::size_t days() const { return rain.size(); }
};

CommuteData simulate_commute(std::size_t days, double p_r, double p_t, double p_f, RandomSource& rng);

enum class CommuteVariant { deterministic, averaged, stochastic, intensity };

CommuteVariant parse_commute_variant(const std::string& name);
std::string to_string(CommuteVariant v);

namespace commute_detail {

template <class T>
T log_mix(double d, const T& p_w, double moto_mean, double moto_sd) {
  using std::log;
  const T taxi = log(p_w) + normal_lpdf(d, T(30.0), T(4.0));
  const T moto = log(T(1.0) - p_w) + normal_lpdf(d, T(moto_mean), T(moto_sd));
  return log_sum_exp(taxi, moto);
}

// log p(rain, duration | p) with willRain summed out; the motorcycle ride
// in rain has mean `wet_mean` and sd `wet_sd`.
template <class T>
T log_rain_duration(int rain, double d, const T& p_r, const T& p_t, const T& p_f, double wet_mean, double wet_sd) {
  using std::log;
  if (rain) return log(p_r) + log_mix(d, p_t, wet_mean, wet_sd);
  return log(T(1.0) - p_r) + log_mix(d, p_f, 15.0, 2.0);
}

}  // namespace commute_detail

// Per-observation log-conditional for a variant, at constrained (p_r, p_t,
// p_f). Observation layouts:
//   deterministic, stochastic: (rain, duration)
//   averaged:                  (rain frequency, duration)
//   intensity:                 (rain, intensity, duration)
template <class T>
T commute_log_cond(CommuteVariant variant, const T& p_r, const T& p_t, const T& p_f, Observation y) {
  using commute_detail::log_rain_duration;
  switch (variant) {
    case CommuteVariant::averaged: {
      const double q = y[0];
      T lp = T(0.0);
      if (q > 0.0) lp = lp + q * log_rain_duration(1, y[1], p_r, p_t, p_f, 60.0, 8.0);
      if (q < 1.0) lp = lp + (1.0 - q) * log_rain_duration(0, y[1], p_r, p_t, p_f, 60.0, 8.0);
      return lp;
    }
    case CommuteVariant::intensity:
      return log_rain_duration(y[0] > 0.5, y[2], p_r, p_t, p_f, 30.0 + 30.0 * y[1], 8.0);
    default:
      return log_rain_duration(y[0] > 0.5, y[1], p_r, p_t, p_f, 60.0, 8.0);
  }
}

// p_r, p_t, p_f ~ Beta(1, 1) in log-odds coordinates.
class CommuteModel : public AutodiffModel<CommuteModel, 3> {
 public:
  explicit CommuteModel(CommuteVariant variant) : variant_(variant) {}

  std::vector<std::string> param_names() const override { return {"p_r", "p_t", "p_f"}; }
  std::vector<Transform> transforms() const override {
    return {Transform::interval(0.0, 1.0), Transform::interval(0.0, 1.0), Transform::interval(0.0, 1.0)};
  }

  template <class T>
  T prior(const std::array<T, 3>& x) const {
    T lp = T(0.0);
    for (const T& xi : x) lp = lp + log_logistic(xi) + log_logistic(T(-xi));
    return lp;
  }
  template <class T>
  T cond(const std::array<T, 3>& x, Observation y) const {
    return commute_log_cond(variant_, logistic(x[0]), logistic(x[1]), logistic(x[2]), y);
  }

  CommuteVariant variant() const { return variant_; }

 private:
  CommuteVariant variant_;
};

// The conditioning object of each variant, with count = days:
//   deterministic: empirical (rain, duration) pairs
//   averaged:      empirical (rain frequency, duration)
//   stochastic:    rains x durations
//   intensity:     (rain, intensity) pairs x intensity-model durations
ObservedDistribution commute_observations(CommuteVariant variant, const CommuteData& data);

}  // namespace stochcond
