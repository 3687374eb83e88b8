// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>

#include "stochcond/errors.hpp"
#include "stochcond/math.hpp"

namespace stochcond {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

std::size_t segment_of(const PiecewiseUniform& pu, double y) {
  // Interior breakpoints belong to the segment on their right.
  auto it = std::upper_bound(pu.breakpoints.begin(), pu.breakpoints.end(), y);
  std::size_t k = static_cast<std::size_t>(it - pu.breakpoints.begin());
  if (k == 0) return 0;
  k -= 1;
  return std::min(k, pu.masses.size() - 1);
}

double piecewise_quantile(const PiecewiseUniform& pu, double p) {
  const auto& cum = pu.cumulative;
  if (p <= 0.0) return pu.breakpoints.front();
  if (p >= 1.0) return pu.breakpoints.back();
  auto it = std::lower_bound(cum.begin(), cum.end(), p);
  const std::size_t i = static_cast<std::size_t>(it - cum.begin());
  if (*it == p) return pu.breakpoints[i];
  const std::size_t k = i - 1;
  const double frac = (p - cum[k]) / (cum[k + 1] - cum[k]);
  return pu.breakpoints[k] + frac * (pu.breakpoints[k + 1] - pu.breakpoints[k]);
}

}  // namespace

PiecewiseUniform PiecewiseUniform::from_masses(std::vector<double> breakpoints,
                                               std::vector<double> masses) {
  if (breakpoints.size() < 2 || masses.size() + 1 != breakpoints.size()) {
    throw ConstructionError("piecewise uniform: need k+1 breakpoints for k masses");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw ConstructionError("piecewise uniform: breakpoints must be strictly increasing");
    }
  }
  double total = 0.0;
  std::vector<double> cumulative{0.0};
  for (double m : masses) {
    if (!(m >= 0.0)) throw ConstructionError("piecewise uniform: negative mass");
    total += m;
    cumulative.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConstructionError("piecewise uniform: masses must sum to 1");
  }
  cumulative.back() = 1.0;
  return PiecewiseUniform{std::move(breakpoints), std::move(masses), std::move(cumulative)};
}

PiecewiseUniform piecewise_uniform_from_quantiles(std::span<const QuantilePoint> qs) {
  if (qs.size() < 2) throw ConstructionError("quantile table needs at least two rows");
  if (qs.front().level != 0.0 || qs.back().level != 1.0) {
    throw ConstructionError("quantile table must include levels 0 and 1");
  }
  PiecewiseUniform pu;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i > 0 && !(qs[i].level > qs[i - 1].level && qs[i].value > qs[i - 1].value)) {
      throw ConstructionError("quantile table must be strictly increasing at row " +
                              std::to_string(i));
    }
    pu.breakpoints.push_back(qs[i].value);
    pu.cumulative.push_back(qs[i].level);
    if (i > 0) pu.masses.push_back(qs[i].level - qs[i - 1].level);
  }
  return pu;
}

void validate(const DistSpec& spec) {
  std::visit(Overloaded{
                 [](const Normal& d) { require(d.sd > 0.0 && std::isfinite(d.mean), "Normal: sd must be > 0"); },
                 [](const LogNormal& d) { require(d.sigma > 0.0 && std::isfinite(d.mu), "LogNormal: sigma must be > 0"); },
                 [](const Beta& d) { require(d.alpha > 0.0 && d.beta > 0.0, "Beta: alpha, beta must be > 0"); },
                 [](const Bernoulli& d) { require(d.p >= 0.0 && d.p <= 1.0, "Bernoulli: p must lie in [0, 1]"); },
                 [](const Uniform& d) { require(d.lo < d.hi, "Uniform: lo must be < hi"); },
                 [](const Dirac& d) { require(std::isfinite(d.value), "Dirac: value must be finite"); },
                 [](const PiecewiseUniform& d) {
                   require(d.breakpoints.size() >= 2 && d.masses.size() + 1 == d.breakpoints.size() &&
                               d.cumulative.size() == d.breakpoints.size(),
                           "PiecewiseUniform: inconsistent sizes");
                   double total = 0.0;
                   for (std::size_t i = 0; i < d.masses.size(); ++i) {
                     require(d.breakpoints[i + 1] > d.breakpoints[i], "PiecewiseUniform: breakpoints not increasing");
                     require(d.masses[i] >= 0.0, "PiecewiseUniform: negative mass");
                     total += d.masses[i];
                   }
                   require(std::abs(total - 1.0) <= 1e-12, "PiecewiseUniform: masses must sum to 1");
                 },
             },
             spec);
}

double log_pdf(const DistSpec& spec, double y) {
  validate(spec);
  return std::visit(
      Overloaded{
          [y](const Normal& d) { return normal_lpdf(y, d.mean, d.sd); },
          [y](const LogNormal& d) { return lognormal_lpdf(y, d.mu, d.sigma); },
          [y](const Beta& d) {
            if (y < 0.0 || y > 1.0) return kNegInf;
            const double lbeta = std::lgamma(d.alpha) + std::lgamma(d.beta) - std::lgamma(d.alpha + d.beta);
            double lp = -lbeta;
            // Exponents of exactly zero contribute nothing, even at the edges.
            if (d.alpha != 1.0) lp += (d.alpha - 1.0) * std::log(y);
            if (d.beta != 1.0) lp += (d.beta - 1.0) * std::log1p(-y);
            return std::isnan(lp) ? kNegInf : lp;
          },
          [y](const Bernoulli& d) {
            if (y == 1.0) return d.p == 0.0 ? kNegInf : std::log(d.p);
            if (y == 0.0) return d.p == 1.0 ? kNegInf : std::log1p(-d.p);
            return kNegInf;
          },
          [y](const Uniform& d) { return (y >= d.lo && y <= d.hi) ? -std::log(d.hi - d.lo) : kNegInf; },
          [y](const Dirac& d) { return y == d.value ? 0.0 : kNegInf; },
          [y](const PiecewiseUniform& d) {
            if (y < d.breakpoints.front() || y > d.breakpoints.back()) return kNegInf;
            const std::size_t k = segment_of(d, y);
            if (d.masses[k] == 0.0) return kNegInf;
            return std::log(d.masses[k]) - std::log(d.breakpoints[k + 1] - d.breakpoints[k]);
          },
      },
      spec);
}

double sample(const DistSpec& spec, RandomSource& rng) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&rng](const Normal& d) { return std::normal_distribution<double>(d.mean, d.sd)(rng); },
          [&rng](const LogNormal& d) { return std::lognormal_distribution<double>(d.mu, d.sigma)(rng); },
          [&rng](const Beta& d) {
            const double a = std::gamma_distribution<double>(d.alpha, 1.0)(rng);
            const double b = std::gamma_distribution<double>(d.beta, 1.0)(rng);
            return a / (a + b);
          },
          [&rng](const Bernoulli& d) { return rng.uniform() < d.p ? 1.0 : 0.0; },
          [&rng](const Uniform& d) { return d.lo + (d.hi - d.lo) * rng.uniform(); },
          [](const Dirac& d) { return d.value; },
          [&rng](const PiecewiseUniform& d) { return piecewise_quantile(d, rng.uniform()); },
      },
      spec);
}

double cdf(const DistSpec& spec, double y) {
  validate(spec);
  return std::visit(
      Overloaded{
          [y](const Normal& d) { return boost::math::cdf(boost::math::normal(d.mean, d.sd), y); },
          [y](const LogNormal& d) {
            return y <= 0.0 ? 0.0 : boost::math::cdf(boost::math::lognormal(d.mu, d.sigma), y);
          },
          [y](const Beta& d) {
            if (y <= 0.0) return 0.0;
            if (y >= 1.0) return 1.0;
            return boost::math::cdf(boost::math::beta_distribution<>(d.alpha, d.beta), y);
          },
          [y](const Bernoulli& d) { return y < 0.0 ? 0.0 : (y < 1.0 ? 1.0 - d.p : 1.0); },
          [y](const Uniform& d) { return std::clamp((y - d.lo) / (d.hi - d.lo), 0.0, 1.0); },
          [y](const Dirac& d) { return y < d.value ? 0.0 : 1.0; },
          [y](const PiecewiseUniform& d) {
            if (y <= d.breakpoints.front()) return 0.0;
            if (y >= d.breakpoints.back()) return 1.0;
            const std::size_t k = segment_of(d, y);
            const double frac = (y - d.breakpoints[k]) / (d.breakpoints[k + 1] - d.breakpoints[k]);
            return d.cumulative[k] + frac * d.masses[k];
          },
      },
      spec);
}

double quantile(const DistSpec& spec, double p) {
  validate(spec);
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("quantile: level must lie in [0, 1]");
  return std::visit(
      Overloaded{
          [p](const Normal& d) {
            if (p == 0.0) return kNegInf;
            if (p == 1.0) return kInf;
            return boost::math::quantile(boost::math::normal(d.mean, d.sd), p);
          },
          [p](const LogNormal& d) {
            if (p == 0.0) return 0.0;
            if (p == 1.0) return kInf;
            return boost::math::quantile(boost::math::lognormal(d.mu, d.sigma), p);
          },
          [p](const Beta& d) { return boost::math::quantile(boost::math::beta_distribution<>(d.alpha, d.beta), p); },
          [p](const Bernoulli& d) { return p <= 1.0 - d.p ? 0.0 : 1.0; },
          [p](const Uniform& d) { return d.lo + p * (d.hi - d.lo); },
          [](const Dirac& d) { return d.value; },
          [p](const PiecewiseUniform& d) { return piecewise_quantile(d, p); },
      },
      spec);
}

bool is_discrete(const DistSpec& spec) {
  return std::holds_alternative<Bernoulli>(spec) || std::holds_alternative<Dirac>(spec);
}

std::vector<std::pair<double, double>> atoms(const DistSpec& spec) {
  validate(spec);
  if (const auto* b = std::get_if<Bernoulli>(&spec)) return {{0.0, 1.0 - b->p}, {1.0, b->p}};
  if (const auto* d = std::get_if<Dirac>(&spec)) return {{d->value, 1.0}};
  return {};
}

}  // namespace stochcond
