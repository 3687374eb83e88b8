// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "stochcond/kernels.hpp"
#include "stochcond/math.hpp"
#include "stochcond/model.hpp"
#include "stochcond/observed.hpp"
#include "stochcond/random.hpp"
#include "stochcond/summary.hpp"

namespace stochcond {

// Directions, for both legs and wind, count counterclockwise from east:
// 0 E, 1 NE, 2 N, 3 NW, 4 W, 5 SW, 6 S, 7 SE. The wind index is the
// direction the wind blows from.
inline constexpr int kDirections = 8;
inline constexpr int kDx[kDirections] = {1, 1, 0, -1, -1, -1, 0, 1};
inline constexpr int kDy[kDirections] = {0, 1, 1, 1, 0, -1, -1, -1};

enum class Tack { port = 0, starboard = 1 };

struct SailingState {
  int x = 0;
  int y = 0;
  Tack tack = Tack::port;
  int wind = 0;
};

struct SailingParams {
  // Cost per unit distance by point of sail: into, up, cross, down, away.
  double point_cost[5] = {kInf, 4.0, 3.0, 2.0, 1.0};
  double delay = 4.0;
  double p_same = 0.4;
  double p_left = 0.3;   // wind + 1
  double p_right = 0.3;  // wind - 1
};

struct LegCost {
  double cost;  // +inf into the wind
  Tack tack;    // tack after the leg
};

LegCost leg_cost(Tack tack, int leg, int wind, const SailingParams& params = {});
// Cost of one leg: point-of-sail cost times leg length, plus the delay
// when the tack flips.
double sailing_cost(Tack tack, int leg, int wind, const SailingParams& params = {});

// One step of the wind random walk driven by a uniform u in (0, 1).
int wind_step_uniform(int wind, double u, const SailingParams& params = {});
int wind_step(int wind, RandomSource& rng, const SailingParams& params = {});

// Lazily extended wind sequence keyed by (seed, step): the initial wind is
// uniform and each later step follows the random walk.
class WindHistory {
 public:
  explicit WindHistory(std::uint64_t seed, const SailingParams& params = {});
  int at(std::size_t step);

 private:
  std::uint64_t seed_;
  SailingParams params_;
  std::vector<int> winds_;
};

// Draws a wind-history seed representable exactly as a double.
std::uint64_t draw_wind_seed(RandomSource& rng);

struct ValueTable {
  int lake = 0;
  std::vector<double> value;      // expected cost to the goal
  std::vector<std::int8_t> leg;   // optimal leg, -1 at the goal
  std::size_t sweeps = 0;

  std::size_t index(int x, int y, Tack tack, int wind) const {
    return ((static_cast<std::size_t>(x) * lake + y) * 2 + static_cast<std::size_t>(tack)) * kDirections + wind;
  }
  double at(const SailingState& s) const { return value[index(s.x, s.y, s.tack, s.wind)]; }
  // Expected cost from corner A on port tack under a uniform initial wind.
  double start_value() const;
};

// Jacobi value iteration until the largest update is below tolerance.
ValueTable value_iteration_serial(int lake, double tolerance, const SailingParams& params = {},
                                  std::size_t max_sweeps = 100000);
ValueTable value_iteration_parallel(int lake, double tolerance, const SailingParams& params = {},
                                    std::size_t max_sweeps = 100000);
ValueTable value_iteration(int lake, double tolerance, const SailingParams& params = {},
                           Exec exec = Exec::serial, std::size_t max_sweeps = 100000);

// One Jacobi sweep; returns the largest absolute update.
double value_sweep(const ValueTable& current, ValueTable& next, const SailingParams& params, Exec exec);

int parametric_policy_leg(const SailingState& s, double unit_cost, int lake, const SailingParams& params = {});
int greedy_policy_leg(const SailingState& s, int lake, const SailingParams& params = {});

struct SailingPolicy {
  enum class Kind { parametric, greedy, optimal };
  Kind kind = Kind::greedy;
  double unit_cost = 0.0;
  const ValueTable* table = nullptr;

  static SailingPolicy parametric(double u) { return {Kind::parametric, u, nullptr}; }
  static SailingPolicy greedy() { return {}; }
  static SailingPolicy optimal(const ValueTable& t) { return {Kind::optimal, 0.0, &t}; }
};

int choose_leg(const SailingPolicy& policy, const SailingState& s, int lake, const SailingParams& params = {});

inline std::size_t default_step_cap(int lake) { return 50 * static_cast<std::size_t>(lake); }

// Cost of sailing from (0, 0) on port tack to (lake-1, lake-1) under the
// wind history of `wind_seed`. Throws StepCapError past `step_cap` legs.
double travel_cost(const SailingPolicy& policy, int lake, std::uint64_t wind_seed, const SailingParams& params = {},
                   std::size_t step_cap = 0);

// -travel_cost / (lake * temperature) for the parametric policy.
double sailing_log_joint(std::uint64_t wind_seed, double unit_cost, int lake, double temperature,
                         const SailingParams& params = {});

inline constexpr double kUnitCostLo = 1.0;
inline constexpr double kUnitCostHi = 8.0;

// Unit cost u ~ Uniform(1, 8) in log-odds coordinates; the observation is a
// wind-history seed and log p(y | u) the Boltzmann log-weight. Rollouts
// that hit the step cap have zero weight.
class SailingModel : public Model {
 public:
  SailingModel(int lake, double temperature, const SailingParams& params = {});

  std::size_t dim() const override { return 1; }
  std::vector<std::string> param_names() const override { return {"unit_cost"}; }
  std::vector<Transform> transforms() const override { return {Transform::interval(kUnitCostLo, kUnitCostHi)}; }
  double log_prior(std::span<const double> x) const override;
  double log_cond(std::span<const double> x, Observation y) const override;

  int lake() const { return lake_; }
  double temperature() const { return temperature_; }

 private:
  int lake_;
  double temperature_;
  SailingParams params_;
};

// Wind histories as an observed distribution (a sampler of seeds).
ObservedDistribution sailing_observations(const SailingParams& params = {});

struct PolicyEvaluation {
  double mean = 0.0;
  Interval ci{0.0, 0.0};
  std::vector<double> costs;
};

// Episode i uses policy_for(i) and an independent wind history.
using PolicyForEpisode = std::function<SailingPolicy(std::size_t)>;
PolicyEvaluation evaluate_policy_serial(const PolicyForEpisode& policy_for, int lake, std::size_t episodes,
                                        RandomSource rng, const SailingParams& params = {});
PolicyEvaluation evaluate_policy_parallel(const PolicyForEpisode& policy_for, int lake, std::size_t episodes,
                                          RandomSource rng, const SailingParams& params = {});
PolicyEvaluation evaluate_policy(const PolicyForEpisode& policy_for, int lake, std::size_t episodes,
                                 RandomSource rng, const SailingParams& params = {}, Exec exec = Exec::serial);
PolicyEvaluation evaluate_policy(const SailingPolicy& policy, int lake, std::size_t episodes, RandomSource rng,
                                 const SailingParams& params = {}, Exec exec = Exec::serial);

}  // namespace stochcond
