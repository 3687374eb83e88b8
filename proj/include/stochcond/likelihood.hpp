// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "stochcond/distributions.hpp"
#include "stochcond/model.hpp"
#include "stochcond/observed.hpp"

namespace stochcond {

// log p(y ~ D | x) = n * sum_y q(y) log p(y | x) for finite-support D.
// Uses 0 log 0 = 0 for q(y) = 0 and returns -inf when q(y) > 0 but
// p(y | x) = 0. A single Dirac observation returns log p(y0 | x) untouched.
double exact_stochastic_loglik(const Model& model, std::span<const double> x, const ObservedDistribution& d);

// The mixture alternative: n * log sum_y q(y) p(y | x).
double alternative_loglik_p1(const Model& model, std::span<const double> x, const ObservedDistribution& d);

// Power mean n * (1/alpha) log sum_y q(y) p(y | x)^alpha; alpha = 0 is the
// geometric (stochastic-conditioning) likelihood.
double power_mean_loglik(const Model& model, std::span<const double> x, const ObservedDistribution& d,
                         double alpha);

// E_{y ~ spec} log p(y | x) for a scalar closed-form D. Discrete families
// are summed exactly; continuous ones use a midpoint rule in probability
// space, y_k = F^{-1}((k + 1/2) / nodes).
double quadrature_stochastic_loglik(const Model& model, std::span<const double> x, const DistSpec& spec,
                                    std::size_t nodes = 512);

enum class LikelihoodKind { stochastic, mixture };

struct ArgmaxKl {
  std::size_t argmax_likelihood;
  std::size_t argmin_kl;
};

// Evaluates the chosen likelihood and KL(q || p(. | x)) on every grid point
// and returns the best index of each (first index on ties).
ArgmaxKl kl_argmax_check(const Model& model, std::span<const ParamVector> grid, const ObservedDistribution& d,
                         LikelihoodKind kind = LikelihoodKind::stochastic);

// Tensor grid over theta: one axis of sample points per family parameter.
using ThetaGrid = std::vector<std::vector<double>>;
using DistFamily = std::function<DistSpec(std::span<const double> theta)>;

// Trapezoid integral of exp(log p(y ~ D_theta | x)) over each grid in turn.
// Passing nested, expanding grids yields the running integral whose plateau
// (or lack of one) indicates whether the family admits a finite
// normalization constant.
std::vector<double> normalization_probe(const Model& model, std::span<const double> x, const DistFamily& family,
                                        std::span<const ThetaGrid> grids, std::size_t nodes = 512);

}  // namespace stochcond
