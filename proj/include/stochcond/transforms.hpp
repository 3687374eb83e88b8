// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cmath>

#include "stochcond/math.hpp"

namespace stochcond {

// One entry of a model's transform ledger: maps an unconstrained coordinate
// to its constrained value and supplies log |dz/dx| for the density change.
struct Transform {
  enum class Kind { identity, log, logit };

  Kind kind = Kind::identity;
  double lo = 0.0;
  double hi = 1.0;

  static Transform identity() { return {}; }
  static Transform positive() { return {Kind::log, 0.0, 1.0}; }
  static Transform interval(double lo, double hi) { return {Kind::logit, lo, hi}; }

  template <class T>
  T constrain(const T& x) const {
    using std::exp;
    switch (kind) {
      case Kind::log:
        return exp(x);
      case Kind::logit:
        return lo + (hi - lo) * logistic(x);
      default:
        return x;
    }
  }

  double unconstrain(double z) const {
    switch (kind) {
      case Kind::log:
        return std::log(z);
      case Kind::logit:
        return logit((z - lo) / (hi - lo));
      default:
        return z;
    }
  }

  template <class T>
  T log_jacobian(const T& x) const {
    switch (kind) {
      case Kind::log:
        return x;
      case Kind::logit:
        return std::log(hi - lo) + log_logistic(x) + log_logistic(T(-x));
      default:
        return T(0.0);
    }
  }
};

}  // namespace stochcond
