// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/models/sailing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stochcond/errors.hpp"

namespace stochcond {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

double leg_length(int leg) { return (leg & 1) ? kSqrt2 : 1.0; }

bool inside(int x, int y, int lake) { return x >= 0 && y >= 0 && x < lake && y < lake; }

int squared_distance_to_goal(int x, int y, int lake) {
  const int dx = lake - 1 - x, dy = lake - 1 - y;
  return dx * dx + dy * dy;
}

void check_lake(int lake) {
  if (lake < 2) throw ParameterError("lake size must be >= 2");
}

}  // namespace

LegCost leg_cost(Tack tack, int leg, int wind, const SailingParams& params) {
  const int d = ((leg - wind) % kDirections + kDirections) % kDirections;
  const int point = std::min(d, kDirections - d);
  Tack next = tack;
  if (d >= 1 && d <= 3) next = Tack::starboard;
  if (d >= 5) next = Tack::port;
  double cost = params.point_cost[point] * leg_length(leg);
  if (next != tack) cost += params.delay;
  return {cost, next};
}

double sailing_cost(Tack tack, int leg, int wind, const SailingParams& params) {
  return leg_cost(tack, leg, wind, params).cost;
}

int wind_step_uniform(int wind, double u, const SailingParams& params) {
  if (u < params.p_same) return wind;
  if (u < params.p_same + params.p_left) return (wind + 1) % kDirections;
  return (wind + kDirections - 1) % kDirections;
}

int wind_step(int wind, RandomSource& rng, const SailingParams& params) {
  return wind_step_uniform(wind, rng.uniform(), params);
}

WindHistory::WindHistory(std::uint64_t seed, const SailingParams& params) : seed_(seed), params_(params) {}

int WindHistory::at(std::size_t step) {
  while (winds_.size() <= step) {
    const std::uint64_t bits = counter_hash(seed_, winds_.size());
    if (winds_.empty()) {
      winds_.push_back(static_cast<int>(bits % kDirections));
    } else {
      winds_.push_back(wind_step_uniform(winds_.back(), to_unit_open(bits), params_));
    }
  }
  return winds_[step];
}

std::uint64_t draw_wind_seed(RandomSource& rng) { return rng() >> 12; }

double ValueTable::start_value() const {
  double s = 0.0;
  for (int w = 0; w < kDirections; ++w) s += value[index(0, 0, Tack::port, w)];
  return s / kDirections;
}

namespace {

// Bellman update at one state; returns the new value and the argmin leg.
std::pair<double, int> bellman(const ValueTable& t, int x, int y, Tack tack, int wind, const SailingParams& p) {
  const int lake = t.lake;
  const int next_wind[3] = {wind, (wind + 1) % kDirections, (wind + kDirections - 1) % kDirections};
  const double prob[3] = {p.p_same, p.p_left, p.p_right};
  double best = kInf;
  int best_leg = -1;
  for (int leg = 0; leg < kDirections; ++leg) {
    const int nx = x + kDx[leg], ny = y + kDy[leg];
    if (!inside(nx, ny, lake)) continue;
    const LegCost lc = leg_cost(tack, leg, wind, p);
    if (!std::isfinite(lc.cost)) continue;
    double future = 0.0;
    if (!(nx == lake - 1 && ny == lake - 1)) {
      for (int k = 0; k < 3; ++k) {
        if (prob[k] > 0.0) future += prob[k] * t.value[t.index(nx, ny, lc.tack, next_wind[k])];
      }
    }
    const double q = lc.cost + future;
    if (q < best) {
      best = q;
      best_leg = leg;
    }
  }
  return {best, best_leg};
}

ValueTable empty_table(int lake) {
  ValueTable t;
  t.lake = lake;
  const std::size_t states = static_cast<std::size_t>(lake) * lake * 2 * kDirections;
  t.value.assign(states, 0.0);
  t.leg.assign(states, -1);
  return t;
}

}  // namespace

double value_sweep(const ValueTable& current, ValueTable& next, const SailingParams& params, Exec exec) {
  const int lake = current.lake;
  const std::size_t cells = static_cast<std::size_t>(lake) * lake;
  // Per-cell largest update, reduced in order afterwards.
  std::vector<double> delta(cells);
  kernels::map_indexed(
      delta,
      [&](std::size_t c) {
        const int x = static_cast<int>(c / lake), y = static_cast<int>(c % lake);
        double worst = 0.0;
        if (x == lake - 1 && y == lake - 1) return worst;
        for (int tack = 0; tack < 2; ++tack) {
          for (int w = 0; w < kDirections; ++w) {
            const auto [v, leg] = bellman(current, x, y, static_cast<Tack>(tack), w, params);
            const std::size_t i = current.index(x, y, static_cast<Tack>(tack), w);
            worst = std::max(worst, std::abs(v - current.value[i]));
            next.value[i] = v;
            next.leg[i] = static_cast<std::int8_t>(leg);
          }
        }
        return worst;
      },
      exec);
  double worst = 0.0;
  for (double d : delta) worst = std::max(worst, d);
  return worst;
}

ValueTable value_iteration(int lake, double tolerance, const SailingParams& params, Exec exec,
                           std::size_t max_sweeps) {
  check_lake(lake);
  if (!(tolerance > 0.0)) throw ParameterError("value iteration tolerance must be > 0");
  ValueTable current = empty_table(lake);
  ValueTable next = current;
  for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
    const double change = value_sweep(current, next, params, exec);
    std::swap(current, next);
    current.sweeps = sweep;
    if (change < tolerance) return current;
  }
  throw NonConvergenceError("value iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
}

ValueTable value_iteration_serial(int lake, double tolerance, const SailingParams& params, std::size_t max_sweeps) {
  return value_iteration(lake, tolerance, params, Exec::serial, max_sweeps);
}

ValueTable value_iteration_parallel(int lake, double tolerance, const SailingParams& params,
                                    std::size_t max_sweeps) {
  return value_iteration(lake, tolerance, params, Exec::parallel, max_sweeps);
}

int parametric_policy_leg(const SailingState& s, double unit_cost, int lake, const SailingParams& params) {
  double best = kInf;
  int best_leg = -1;
  for (int leg = 0; leg < kDirections; ++leg) {
    const int nx = s.x + kDx[leg], ny = s.y + kDy[leg];
    if (!inside(nx, ny, lake)) continue;
    const double c = sailing_cost(s.tack, leg, s.wind, params);
    if (!std::isfinite(c)) continue;
    const double score = c + unit_cost * std::sqrt(static_cast<double>(squared_distance_to_goal(nx, ny, lake)));
    if (score < best) {
      best = score;
      best_leg = leg;
    }
  }
  if (best_leg < 0) throw ParameterError("no feasible leg");
  return best_leg;
}

int greedy_policy_leg(const SailingState& s, int lake, const SailingParams& params) {
  int best_d2 = 0;
  double best_cost = kInf;
  int best_leg = -1;
  for (int leg = 0; leg < kDirections; ++leg) {
    const int nx = s.x + kDx[leg], ny = s.y + kDy[leg];
    if (!inside(nx, ny, lake)) continue;
    const double c = sailing_cost(s.tack, leg, s.wind, params);
    if (!std::isfinite(c)) continue;
    const int d2 = squared_distance_to_goal(nx, ny, lake);
    if (best_leg < 0 || d2 < best_d2 || (d2 == best_d2 && c < best_cost)) {
      best_d2 = d2;
      best_cost = c;
      best_leg = leg;
    }
  }
  if (best_leg < 0) throw ParameterError("no feasible leg");
  return best_leg;
}

int choose_leg(const SailingPolicy& policy, const SailingState& s, int lake, const SailingParams& params) {
  switch (policy.kind) {
    case SailingPolicy::Kind::parametric:
      return parametric_policy_leg(s, policy.unit_cost, lake, params);
    case SailingPolicy::Kind::optimal:
      if (policy.table == nullptr || policy.table->lake != lake) {
        throw ParameterError("optimal policy needs a value table for this lake");
      }
      return policy.table->leg[policy.table->index(s.x, s.y, s.tack, s.wind)];
    default:
      return greedy_policy_leg(s, lake, params);
  }
}

double travel_cost(const SailingPolicy& policy, int lake, std::uint64_t wind_seed, const SailingParams& params,
                   std::size_t step_cap) {
  check_lake(lake);
  if (step_cap == 0) step_cap = default_step_cap(lake);
  WindHistory wind(wind_seed, params);
  SailingState s;
  double cost = 0.0;
  for (std::size_t step = 0; step < step_cap; ++step) {
    s.wind = wind.at(step);
    const int leg = choose_leg(policy, s, lake, params);
    const LegCost lc = leg_cost(s.tack, leg, s.wind, params);
    cost += lc.cost;
    s.tack = lc.tack;
    s.x += kDx[leg];
    s.y += kDy[leg];
    if (s.x == lake - 1 && s.y == lake - 1) return cost;
  }
  throw StepCapError("rollout exceeded " + std::to_string(step_cap) + " legs (lake " + std::to_string(lake) +
                     ", position " + std::to_string(s.x) + "," + std::to_string(s.y) + ")");
}

double sailing_log_joint(std::uint64_t wind_seed, double unit_cost, int lake, double temperature,
                         const SailingParams& params) {
  if (!(temperature > 0.0)) throw ParameterError("temperature must be > 0");
  const double cost = travel_cost(SailingPolicy::parametric(unit_cost), lake, wind_seed, params);
  return -cost / (static_cast<double>(lake) * temperature);
}

SailingModel::SailingModel(int lake, double temperature, const SailingParams& params)
    : lake_(lake), temperature_(temperature), params_(params) {
  check_lake(lake);
  if (!(temperature > 0.0)) throw ParameterError("temperature must be > 0");
}

double SailingModel::log_prior(std::span<const double> x) const {
  if (x.size() != 1) throw ParameterError("parameter vector has wrong dimension");
  return log_jacobian(x) - std::log(kUnitCostHi - kUnitCostLo);
}

double SailingModel::log_cond(std::span<const double> x, Observation y) const {
  const double u = constrain(x)[0];
  try {
    return sailing_log_joint(static_cast<std::uint64_t>(y[0]), u, lake_, temperature_, params_);
  } catch (const StepCapError&) {
    return kNegInf;
  }
}

ObservedDistribution sailing_observations(const SailingParams&) {
  return ObservedDistribution::sampler(
      [](RandomSource& rng) { return std::vector<double>{static_cast<double>(draw_wind_seed(rng))}; },
      "wind-history");
}

PolicyEvaluation evaluate_policy(const PolicyForEpisode& policy_for, int lake, std::size_t episodes,
                                 RandomSource rng, const SailingParams& params, Exec exec) {
  if (episodes == 0) throw ParameterError("evaluate_policy: episodes must be >= 1");
  PolicyEvaluation out;
  out.costs.resize(episodes);
  kernels::map_indexed(
      out.costs,
      [&](std::size_t i) {
        RandomSource episode = rng.split(i);
        return travel_cost(policy_for(i), lake, draw_wind_seed(episode), params);
      },
      exec);
  out.mean = mean(out.costs);
  out.ci = episodes > 1 ? mean_ci95(out.costs) : Interval{out.mean, out.mean};
  return out;
}

PolicyEvaluation evaluate_policy(const SailingPolicy& policy, int lake, std::size_t episodes, RandomSource rng,
                                 const SailingParams& params, Exec exec) {
  return evaluate_policy([&](std::size_t) { return policy; }, lake, episodes, rng, params, exec);
}

PolicyEvaluation evaluate_policy_serial(const PolicyForEpisode& policy_for, int lake, std::size_t episodes,
                                        RandomSource rng, const SailingParams& params) {
  return evaluate_policy(policy_for, lake, episodes, rng, params, Exec::serial);
}

PolicyEvaluation evaluate_policy_parallel(const PolicyForEpisode& policy_for, int lake, std::size_t episodes,
                                          RandomSource rng, const SailingParams& params) {
  return evaluate_policy(policy_for, lake, episodes, rng, params, Exec::parallel);
}

}  // namespace stochcond
