// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/gradients.hpp"

#include <algorithm>
#include <cmath>

#include "stochcond/math.hpp"

namespace stochcond {

GradResult Model::grad_log_prior(std::span<const double>) const {
  throw NotDifferentiableError("model does not provide gradients");
}

GradResult Model::grad_log_cond(std::span<const double>, Observation) const {
  throw NotDifferentiableError("model does not provide gradients");
}

ParamVector Model::constrain(std::span<const double> x) const {
  const auto t = transforms();
  ParamVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = t[i].constrain(x[i]);
  return z;
}

ParamVector Model::unconstrain(std::span<const double> z) const {
  const auto t = transforms();
  ParamVector x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = t[i].unconstrain(z[i]);
  return x;
}

double Model::log_jacobian(std::span<const double> x) const {
  const auto t = transforms();
  double lj = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) lj += t[i].log_jacobian(x[i]);
  return lj;
}

GradResult grad_log_joint(const Model& model, std::span<const double> x, Observation y) {
  GradResult prior = model.grad_log_prior(x);
  const GradResult cond = model.grad_log_cond(x, y);
  prior.value += cond.value;
  if (!std::isfinite(prior.value)) {
    prior.value = kNegInf;
    std::fill(prior.grad.begin(), prior.grad.end(), 0.0);
    return prior;
  }
  for (std::size_t i = 0; i < prior.grad.size(); ++i) prior.grad[i] += cond.grad[i];
  return prior;
}

double finite_difference_check(const Model& model, std::span<const double> x, Observation y,
                               double h) {
  if (!(h > 0.0)) throw ParameterError("finite_difference_check: h must be > 0");
  const GradResult analytic = grad_log_joint(model, x, y);
  if (!std::isfinite(analytic.value)) return kInf;
  auto log_joint = [&](std::span<const double> p) { return model.log_prior(p) + model.log_cond(p, y); };
  const auto numeric = central_difference(log_joint, x, h);
  double worst = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double err = std::abs(analytic.grad[i] - numeric[i]);
    if (!std::isfinite(err)) return kInf;
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace stochcond
