// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

// Scalar helpers written once for double and ad::Dual.

#include <cmath>
#include <limits>
#include <numbers>

#include "stochcond/dual.hpp"

namespace stochcond {

using ad::value_of;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kHalfLog2Pi = 0.91893853320467274178;

// log(1 + exp(z)) without overflow.
template <class T>
T softplus(const T& z) {
  using std::exp;
  using std::log1p;
  if (value_of(z) > 0.0) return z + log1p(exp(-z));
  return log1p(exp(z));
}

// log(1 / (1 + exp(-z))).
template <class T>
T log_logistic(const T& z) {
  return -softplus(T(-z));
}

template <class T>
T logistic(const T& z) {
  using std::exp;
  if (value_of(z) >= 0.0) return 1.0 / (1.0 + exp(-z));
  const T e = exp(z);
  return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

template <class T>
T log_sum_exp(const T& a, const T& b) {
  using std::exp;
  using std::log;
  const T& hi = value_of(a) >= value_of(b) ? a : b;
  const T& lo = value_of(a) >= value_of(b) ? b : a;
  if (value_of(hi) == kNegInf) return hi;
  return hi + log(1.0 + exp(lo - hi));
}

template <class T>
T normal_lpdf(double y, const T& mean, const T& sd) {
  using std::log;
  const T z = (y - mean) / sd;
  return -kHalfLog2Pi - log(sd) - 0.5 * z * z;
}

template <class T>
T lognormal_lpdf(double y, const T& mu, const T& sigma) {
  using std::log;
  if (y <= 0.0) return T(kNegInf);
  const double ly = std::log(y);
  const T z = (ly - mu) / sigma;
  return -ly - kHalfLog2Pi - log(sigma) - 0.5 * z * z;
}

// Bernoulli log-mass parameterized by log-odds, stable for any real input.
template <class T>
T bernoulli_logit_lpmf(int y, const T& log_odds) {
  return y == 1 ? log_logistic(log_odds) : log_logistic(T(-log_odds));
}

}  // namespace stochcond
