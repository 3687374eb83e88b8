// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "stochcond/dual.hpp"
#include "stochcond/errors.hpp"
#include "stochcond/transforms.hpp"

namespace stochcond {

// A single observed value y; scalar observations have length 1.
using Observation = std::span<const double>;
using ParamVector = std::vector<double>;

struct GradResult {
  double value = 0.0;
  std::vector<double> grad;
};

// The model contract every estimator and inference algorithm consumes:
// p(x, y) = p(x) p(y | x) over unconstrained latents x. log_prior includes
// the log-Jacobian of the transform ledger, so it is a density in x.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::size_t dim() const = 0;
  virtual std::vector<std::string> param_names() const = 0;
  virtual std::vector<Transform> transforms() const = 0;

  virtual double log_prior(std::span<const double> x) const = 0;
  virtual double log_cond(std::span<const double> x, Observation y) const = 0;

  virtual bool differentiable() const { return false; }
  virtual GradResult grad_log_prior(std::span<const double> x) const;
  virtual GradResult grad_log_cond(std::span<const double> x, Observation y) const;

  ParamVector constrain(std::span<const double> x) const;
  ParamVector unconstrain(std::span<const double> z) const;
  double log_jacobian(std::span<const double> x) const;
};

// Implements the differentiable part of Model by forward-mode AD. Derived
// provides
//   template <class T> T prior(const std::array<T, Dim>& x) const;
//   template <class T> T cond(const std::array<T, Dim>& x, Observation y) const;
template <class Derived, std::size_t Dim>
class AutodiffModel : public Model {
 public:
  static constexpr std::size_t kDim = Dim;
  using Grad = ad::Dual<Dim>;

  std::size_t dim() const final { return Dim; }
  bool differentiable() const final { return true; }

  double log_prior(std::span<const double> x) const final {
    return derived().prior(load(x));
  }
  double log_cond(std::span<const double> x, Observation y) const final {
    return derived().cond(load(x), y);
  }
  GradResult grad_log_prior(std::span<const double> x) const final {
    return unpack(derived().prior(seed(x)));
  }
  GradResult grad_log_cond(std::span<const double> x, Observation y) const final {
    return unpack(derived().cond(seed(x), y));
  }

 private:
  const Derived& derived() const { return static_cast<const Derived&>(*this); }

  static std::array<double, Dim> load(std::span<const double> x) {
    if (x.size() != Dim) throw ParameterError("parameter vector has wrong dimension");
    std::array<double, Dim> a{};
    for (std::size_t i = 0; i < Dim; ++i) a[i] = x[i];
    return a;
  }

  static std::array<Grad, Dim> seed(std::span<const double> x) {
    if (x.size() != Dim) throw ParameterError("parameter vector has wrong dimension");
    std::array<Grad, Dim> a{};
    for (std::size_t i = 0; i < Dim; ++i) a[i] = Grad::variable(x[i], i);
    return a;
  }

  static GradResult unpack(const Grad& v) {
    GradResult r{v.val, std::vector<double>(v.d.begin(), v.d.end())};
    if (!std::isfinite(r.value)) {
      r.value = -std::numeric_limits<double>::infinity();
      std::fill(r.grad.begin(), r.grad.end(), 0.0);
    }
    return r;
  }
};

}  // namespace stochcond
