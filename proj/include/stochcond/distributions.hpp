// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "stochcond/random.hpp"

namespace stochcond {

struct Normal {
  double mean;
  double sd;
};

struct LogNormal {
  double mu;
  double sigma;
};

struct Beta {
  double alpha;
  double beta;
};

struct Bernoulli {
  double p;
};

struct Uniform {
  double lo;
  double hi;
};

struct Dirac {
  double value;
};

// Piecewise-constant density between strictly increasing breakpoints.
// `cumulative` holds the probability level at each breakpoint (0 first,
// 1 last); masses are the consecutive differences. Zero density outside
// [breakpoints.front(), breakpoints.back()].
struct PiecewiseUniform {
  std::vector<double> breakpoints;
  std::vector<double> masses;
  std::vector<double> cumulative;

  // Builds from segment masses; throws ConstructionError on invalid input.
  static PiecewiseUniform from_masses(std::vector<double> breakpoints, std::vector<double> masses);
};

using DistSpec = std::variant<Normal, LogNormal, Beta, Bernoulli, Uniform, Dirac, PiecewiseUniform>;

struct QuantilePoint {
  double level;
  double value;
};

// Throws ParameterError when the parameters are outside their domain.
void validate(const DistSpec& spec);

// Natural-log density (or mass for Bernoulli and Dirac). -inf outside the
// support, never NaN.
double log_pdf(const DistSpec& spec, double y);

double sample(const DistSpec& spec, RandomSource& rng);

double cdf(const DistSpec& spec, double y);

// Generalized inverse of cdf: smallest y with cdf(y) >= p.
double quantile(const DistSpec& spec, double p);

bool is_discrete(const DistSpec& spec);

// (value, probability) pairs of a finite-support spec; empty for continuous
// families.
std::vector<std::pair<double, double>> atoms(const DistSpec& spec);

// Quantile table -> piecewise uniform. Levels must start at 0, end at 1 and
// both levels and values must be strictly increasing.
PiecewiseUniform piecewise_uniform_from_quantiles(std::span<const QuantilePoint> qs);

}  // namespace stochcond
