// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <span>

#include "stochcond/model.hpp"

namespace stochcond {

// Gradient of log p(x) + log p(y | x) in unconstrained coordinates. A
// non-finite log-joint comes back as value = -inf with a zero gradient.
GradResult grad_log_joint(const Model& model, std::span<const double> x, Observation y);

// Largest |analytic - central difference| over coordinates with step h.
// Returns +inf when either side is non-finite, which flags points where the
// log-joint is not differentiable (or not defined) at the h-neighbourhood.
double finite_difference_check(const Model& model, std::span<const double> x, Observation y,
                               double h = 1e-5);

// Central-difference gradient of an arbitrary scalar function; shared by the
// checker above and by test oracles.
template <class F>
std::vector<double> central_difference(F&& f, std::span<const double> x, double h) {
  std::vector<double> g(x.size());
  std::vector<double> xp(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = xp[i];
    xp[i] = xi + h;
    const double up = f(std::span<const double>(xp));
    xp[i] = xi - h;
    const double down = f(std::span<const double>(xp));
    xp[i] = xi;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace stochcond
