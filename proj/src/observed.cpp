// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/observed.hpp"

#include "stochcond/errors.hpp"

namespace stochcond {

ObservedDistribution::ObservedDistribution(Variant v, double count) : v_(std::move(v)), count_(count) {
  if (!(count_ >= 1.0)) throw ParameterError("observation count must be >= 1");
  if (const auto* e = std::get_if<Empirical>(&v_); e && e->samples.empty()) {
    throw ConstructionError("empirical sample set must be nonempty");
  }
  if (const auto* p = std::get_if<ProductEmpirical>(&v_)) {
    if (p->components.empty()) throw ConstructionError("product needs at least one component");
    for (const auto& c : p->components) {
      if (c.empty()) throw ConstructionError("product component must be nonempty");
    }
  }
  if (const auto* p = std::get_if<Parametric>(&v_)) validate(p->spec);
  if (const auto* s = std::get_if<Sampler>(&v_); s && !s->draw) {
    throw ConstructionError("sampler must be callable");
  }
}

ObservedDistribution ObservedDistribution::empirical(std::vector<std::vector<double>> samples, double count) {
  return ObservedDistribution(Empirical{std::move(samples)}, count);
}

ObservedDistribution ObservedDistribution::empirical_scalar(std::span<const double> values, double count) {
  std::vector<std::vector<double>> samples;
  samples.reserve(values.size());
  for (double v : values) samples.push_back({v});
  return empirical(std::move(samples), count);
}

ObservedDistribution ObservedDistribution::product(std::vector<std::vector<std::vector<double>>> components,
                                                   double count) {
  return ObservedDistribution(ProductEmpirical{std::move(components)}, count);
}

ObservedDistribution ObservedDistribution::parametric(DistSpec spec, double count) {
  return ObservedDistribution(Parametric{std::move(spec)}, count);
}

ObservedDistribution ObservedDistribution::dirac(std::vector<double> value) {
  return ObservedDistribution(DiracObs{std::move(value)}, 1.0);
}

ObservedDistribution ObservedDistribution::sampler(std::function<std::vector<double>(RandomSource&)> draw,
                                                   std::string name, double count) {
  return ObservedDistribution(Sampler{std::move(draw), std::move(name)}, count);
}

ObservedDistribution ObservedDistribution::subsample(std::vector<std::vector<double>> stored) {
  const double k = static_cast<double>(stored.size());
  return empirical(std::move(stored), k);
}

bool ObservedDistribution::has_finite_support() const {
  if (const auto* p = std::get_if<Parametric>(&v_)) return is_discrete(p->spec);
  return !std::holds_alternative<Sampler>(v_);
}

std::size_t ObservedDistribution::observation_size() const {
  if (const auto* e = std::get_if<Empirical>(&v_)) return e->samples.front().size();
  if (const auto* p = std::get_if<ProductEmpirical>(&v_)) {
    std::size_t n = 0;
    for (const auto& c : p->components) n += c.front().size();
    return n;
  }
  if (const auto* d = std::get_if<DiracObs>(&v_)) return d->value.size();
  return 1;
}

std::vector<double> ObservedDistribution::draw(RandomSource& rng) const {
  if (const auto* e = std::get_if<Empirical>(&v_)) return e->samples[rng.index(e->samples.size())];
  if (const auto* p = std::get_if<ProductEmpirical>(&v_)) {
    std::vector<double> y;
    for (const auto& c : p->components) {
      const auto& pick = c[rng.index(c.size())];
      y.insert(y.end(), pick.begin(), pick.end());
    }
    return y;
  }
  if (const auto* p = std::get_if<Parametric>(&v_)) return {sample(p->spec, rng)};
  if (const auto* d = std::get_if<DiracObs>(&v_)) return d->value;
  const auto& s = std::get<Sampler>(v_);
  return s.draw(rng);
}

void ObservedDistribution::for_each_atom(
    const std::function<void(double, std::span<const double>)>& fn) const {
  if (const auto* e = std::get_if<Empirical>(&v_)) {
    const double q = 1.0 / static_cast<double>(e->samples.size());
    for (const auto& y : e->samples) fn(q, y);
    return;
  }
  if (const auto* p = std::get_if<ProductEmpirical>(&v_)) {
    const auto& comps = p->components;
    double q = 1.0;
    for (const auto& c : comps) q /= static_cast<double>(c.size());
    // Odometer over component indices; y is rebuilt in place per atom.
    std::vector<std::size_t> idx(comps.size(), 0);
    std::vector<double> y;
    while (true) {
      y.clear();
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const auto& pick = comps[k][idx[k]];
        y.insert(y.end(), pick.begin(), pick.end());
      }
      fn(q, y);
      std::size_t k = comps.size();
      while (k > 0) {
        --k;
        if (++idx[k] < comps[k].size()) break;
        idx[k] = 0;
        if (k == 0) return;
      }
      if (comps.empty()) return;
    }
  }
  if (const auto* p = std::get_if<Parametric>(&v_)) {
    if (!is_discrete(p->spec)) {
      throw UnsupportedExactError("exact evaluation needs finite support; use the Monte Carlo estimator");
    }
    for (const auto& [value, q] : atoms(p->spec)) {
      if (q > 0.0) {
        const double y[1] = {value};
        fn(q, y);
      }
    }
    return;
  }
  if (const auto* d = std::get_if<DiracObs>(&v_)) {
    fn(1.0, d->value);
    return;
  }
  throw UnsupportedExactError("sampler-defined distribution has no enumerable support");
}

}  // namespace stochcond
