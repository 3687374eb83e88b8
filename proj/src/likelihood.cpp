// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/likelihood.hpp"

#include <cmath>

#include "stochcond/errors.hpp"
#include "stochcond/math.hpp"

namespace stochcond {
namespace {

// log sum_i exp(v_i) over a running stream of terms.
class LogSumAccumulator {
 public:
  void add(double v) {
    if (v == kNegInf) return;
    if (v <= max_) {
      sum_ += std::exp(v - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - v) + 1.0;
      max_ = v;
    }
  }
  double value() const { return max_ == kNegInf ? kNegInf : max_ + std::log(sum_); }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

double trapezoid_weight(const std::vector<double>& axis, std::size_t i) {
  if (axis.size() < 2) return 0.0;
  double w = 0.0;
  if (i > 0) w += 0.5 * (axis[i] - axis[i - 1]);
  if (i + 1 < axis.size()) w += 0.5 * (axis[i + 1] - axis[i]);
  return w;
}

}  // namespace

double exact_stochastic_loglik(const Model& model, std::span<const double> x, const ObservedDistribution& d) {
  if (d.is_dirac() && d.count() == 1.0) {
    return model.log_cond(x, std::get<DiracObs>(d.variant()).value);
  }
  double acc = 0.0;
  bool impossible = false;
  d.for_each_atom([&](double q, std::span<const double> y) {
    if (impossible) return;
    const double lp = model.log_cond(x, y);
    if (lp == kNegInf) {
      impossible = true;
      return;
    }
    acc += q * lp;
  });
  return impossible ? kNegInf : d.count() * acc;
}

double alternative_loglik_p1(const Model& model, std::span<const double> x, const ObservedDistribution& d) {
  return power_mean_loglik(model, x, d, 1.0);
}

double power_mean_loglik(const Model& model, std::span<const double> x, const ObservedDistribution& d,
                         double alpha) {
  if (alpha == 0.0) return exact_stochastic_loglik(model, x, d);
  LogSumAccumulator acc;
  d.for_each_atom([&](double q, std::span<const double> y) {
    const double lp = model.log_cond(x, y);
    if (lp == kNegInf && alpha < 0.0) {
      // p^alpha is infinite: the power mean collapses to zero.
      acc.add(kInf);
      return;
    }
    acc.add(std::log(q) + alpha * lp);
  });
  const double v = acc.value();
  if (v == kInf) return d.count() * kNegInf;
  return d.count() * v / alpha;
}

double quadrature_stochastic_loglik(const Model& model, std::span<const double> x, const DistSpec& spec,
                                    std::size_t nodes) {
  if (is_discrete(spec)) {
    double acc = 0.0;
    for (const auto& [value, q] : atoms(spec)) {
      if (q == 0.0) continue;
      const double y[1] = {value};
      const double lp = model.log_cond(x, y);
      if (lp == kNegInf) return kNegInf;
      acc += q * lp;
    }
    return acc;
  }
  if (nodes == 0) throw ParameterError("quadrature needs at least one node");
  double acc = 0.0;
  const double w = 1.0 / static_cast<double>(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double y[1] = {quantile(spec, (static_cast<double>(k) + 0.5) * w)};
    const double lp = model.log_cond(x, y);
    if (lp == kNegInf) return kNegInf;
    acc += lp;
  }
  return acc * w;
}

ArgmaxKl kl_argmax_check(const Model& model, std::span<const ParamVector> grid, const ObservedDistribution& d,
                         LikelihoodKind kind) {
  if (grid.empty()) throw ParameterError("kl_argmax_check: empty grid");
  ArgmaxKl best{0, 0};
  double best_lik = kNegInf;
  double best_kl = kInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double lik = kind == LikelihoodKind::stochastic ? exact_stochastic_loglik(model, grid[i], d)
                                                          : alternative_loglik_p1(model, grid[i], d);
    // KL(q || p) = sum q log q - sum q log p, accumulated on its own.
    double kl = 0.0;
    d.for_each_atom([&](double q, std::span<const double> y) {
      kl += q * (std::log(q) - model.log_cond(grid[i], y));
    });
    if (i == 0 || lik > best_lik) {
      best_lik = lik;
      best.argmax_likelihood = i;
    }
    if (i == 0 || kl < best_kl) {
      best_kl = kl;
      best.argmin_kl = i;
    }
  }
  return best;
}

std::vector<double> normalization_probe(const Model& model, std::span<const double> x, const DistFamily& family,
                                        std::span<const ThetaGrid> grids, std::size_t nodes) {
  std::vector<double> integrals;
  integrals.reserve(grids.size());
  for (const ThetaGrid& grid : grids) {
    const std::size_t dims = grid.size();
    std::vector<std::size_t> idx(dims, 0);
    std::vector<double> theta(dims);
    double total = 0.0;
    bool done = dims == 0;
    while (!done) {
      double w = 1.0;
      for (std::size_t k = 0; k < dims; ++k) {
        theta[k] = grid[k][idx[k]];
        w *= trapezoid_weight(grid[k], idx[k]);
      }
      if (w > 0.0) {
        const double ll = quadrature_stochastic_loglik(model, x, family(theta), nodes);
        total += w * std::exp(ll);
      }
      std::size_t k = dims;
      while (true) {
        if (k == 0) {
          done = true;
          break;
        }
        --k;
        if (++idx[k] < grid[k].size()) break;
        idx[k] = 0;
      }
    }
    integrals.push_back(total);
  }
  return integrals;
}

}  // namespace stochcond
