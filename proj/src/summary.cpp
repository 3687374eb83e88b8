// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/summary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "stochcond/errors.hpp"

namespace stochcond {

namespace {

void require_nonempty(std::span<const double> v, const char* what) {
  if (v.empty()) throw ParameterError(std::string(what) + ": empty input");
}

}  // namespace

double mean(std::span<const double> v) {
  require_nonempty(v, "mean");
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sd(std::span<const double> v) {
  if (v.size() < 2) throw InsufficientSamplesError("sd needs at least two values");
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double quantile_type7(std::span<const double> v, double p) {
  require_nonempty(v, "quantile");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("quantile level outside [0, 1]");
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  const double h = (static_cast<double>(s.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, s.size() - 1);
  return s[lo] + (h - static_cast<double>(lo)) * (s[hi] - s[lo]);
}

double weighted_quantile(std::span<const double> v, std::span<const double> w, double p) {
  require_nonempty(v, "weighted quantile");
  if (v.size() != w.size()) throw ParameterError("weighted quantile: size mismatch");
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  double cum = 0.0;
  for (std::size_t i : order) {
    cum += w[i] / total;
    if (cum >= p) return v[i];
  }
  return v[order.back()];
}

double weighted_mean(std::span<const double> v, std::span<const double> w) {
  require_nonempty(v, "weighted mean");
  double sw = 0.0, swx = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sw += w[i];
    swx += w[i] * v[i];
  }
  return swx / sw;
}

double weighted_sd(std::span<const double> v, std::span<const double> w) {
  const double m = weighted_mean(v, w);
  double sw = 0.0, ss = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sw += w[i];
    ss += w[i] * (v[i] - m) * (v[i] - m);
  }
  return std::sqrt(ss / sw);
}

double effective_sample_size(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 4) return static_cast<double>(n);
  const double m = mean(v);
  auto autocov = [&](std::size_t lag) {
    double s = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) s += (v[i] - m) * (v[i + lag] - m);
    return s / static_cast<double>(n);
  };
  const double c0 = autocov(0);
  if (c0 <= 0.0) return static_cast<double>(n);
  // Sum pairs Gamma_k = rho_2k + rho_2k+1 while positive.
  double tau = -1.0;
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    const double gamma = (autocov(2 * k) + autocov(2 * k + 1)) / c0;
    if (gamma <= 0.0) break;
    tau += 2.0 * gamma;
  }
  return static_cast<double>(n) / std::max(tau, 1e-12);
}

double kish_ess(std::span<const double> w) {
  double s = 0.0, s2 = 0.0;
  for (double x : w) {
    s += x;
    s2 += x * x;
  }
  return s2 > 0.0 ? s * s / s2 : 0.0;
}

Interval mean_ci95(std::span<const double> v) {
  const double m = mean(v);
  const double half = 1.959963984540054 * sd(v) / std::sqrt(static_cast<double>(v.size()));
  return {m - half, m + half};
}

std::vector<double> histogram2d(std::span<const double> a, std::span<const double> b, double lo, double hi,
                                std::size_t bins) {
  if (a.size() != b.size() || a.empty()) throw ParameterError("histogram2d: bad input sizes");
  if (bins == 0 || !(hi > lo)) throw ParameterError("histogram2d: bad grid");
  std::vector<double> h(bins * bins, 0.0);
  auto bin = [&](double x) {
    const double f = (x - lo) / (hi - lo) * static_cast<double>(bins);
    if (!(f > 0.0)) return std::size_t{0};
    return std::min(static_cast<std::size_t>(f), bins - 1);
  };
  for (std::size_t i = 0; i < a.size(); ++i) h[bin(a[i]) * bins + bin(b[i])] += 1.0;
  for (double& x : h) x /= static_cast<double>(a.size());
  return h;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ParameterError("total_variation: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

double kde_mode(std::span<const double> v, double lo, double hi, std::size_t grid) {
  if (v.size() < 2) throw InsufficientSamplesError("kde_mode needs at least two values");
  if (grid < 2 || !(hi > lo)) throw ParameterError("kde_mode: bad grid");
  const double n = static_cast<double>(v.size());
  const double s = sd(v);
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);
  double spread = std::min(s, iqr / 1.34);
  if (!(spread > 0.0)) spread = s > 0.0 ? s : (hi - lo) / static_cast<double>(grid);
  const double bw = 0.9 * spread * std::pow(n, -0.2);
  double best_x = lo, best = -1.0;
  for (std::size_t g = 0; g < grid; ++g) {
    const double x = lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(grid - 1);
    // Only points within 6 bandwidths matter.
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), x - 6.0 * bw);
    const auto last = std::upper_bound(sorted.begin(), sorted.end(), x + 6.0 * bw);
    double dens = 0.0;
    for (auto it = first; it != last; ++it) {
      const double z = (x - *it) / bw;
      dens += std::exp(-0.5 * z * z);
    }
    if (dens > best) {
      best = dens;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace stochcond
