// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stochcond/distributions.hpp"
#include "stochcond/random.hpp"

namespace stochcond {

// Equally weighted observed values (each a vector; scalars have length 1).
struct Empirical {
  std::vector<std::vector<double>> samples;
};

// Independently observed marginal sample sets. A draw concatenates one
// uniformly chosen element of every component; the finite support is the
// Cartesian product, which is only ever walked, never stored.
struct ProductEmpirical {
  std::vector<std::vector<std::vector<double>>> components;
};

// A scalar observed distribution given in closed form.
struct Parametric {
  DistSpec spec;
};

struct DiracObs {
  std::vector<double> value;
};

// Black-box source of observations, e.g. a simulator.
struct Sampler {
  std::function<std::vector<double>(RandomSource&)> draw;
  std::string name;
};

// The conditioning object D. `count` is the number n of observations
// y_1..n ~ D the model is conditioned on; likelihoods and estimates scale
// linearly in it (n = 1 is the single-observation definition).
class ObservedDistribution {
 public:
  using Variant = std::variant<Empirical, ProductEmpirical, Parametric, DiracObs, Sampler>;

  ObservedDistribution(Variant v, double count = 1.0);

  static ObservedDistribution empirical(std::vector<std::vector<double>> samples, double count = 1.0);
  static ObservedDistribution empirical_scalar(std::span<const double> values, double count = 1.0);
  static ObservedDistribution product(std::vector<std::vector<std::vector<double>>> components,
                                      double count = 1.0);
  static ObservedDistribution parametric(DistSpec spec, double count = 1.0);
  static ObservedDistribution dirac(std::vector<double> value);
  static ObservedDistribution sampler(std::function<std::vector<double>(RandomSource&)> draw,
                                      std::string name, double count = 1.0);
  // Subsampling view of K stored observations: Empirical with count K, so
  // count * mean of N draws is the usual K/N-scaled subsample sum.
  static ObservedDistribution subsample(std::vector<std::vector<double>> stored);

  const Variant& variant() const { return v_; }
  double count() const { return count_; }

  bool is_dirac() const { return std::holds_alternative<DiracObs>(v_); }
  bool has_finite_support() const;
  std::size_t observation_size() const;

  std::vector<double> draw(RandomSource& rng) const;

  // Calls fn(q, y) for every atom with q > 0. Throws UnsupportedExactError
  // when D has no finite support.
  void for_each_atom(const std::function<void(double, std::span<const double>)>& fn) const;

 private:
  Variant v_;
  double count_;
};

}  // namespace stochcond
