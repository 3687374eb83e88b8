// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stochcond {

double mean(std::span<const double> v);
// Sample standard deviation with the N - 1 denominator.
double sd(std::span<const double> v);

// Type-7 (linear interpolation) sample quantile, p in [0, 1].
double quantile_type7(std::span<const double> v, double p);

// Inverse of the weighted empirical CDF: smallest value whose cumulative
// normalized weight reaches p.
double weighted_quantile(std::span<const double> v, std::span<const double> w, double p);
double weighted_mean(std::span<const double> v, std::span<const double> w);
double weighted_sd(std::span<const double> v, std::span<const double> w);

// Geyer initial-positive-sequence estimate for one chain.
double effective_sample_size(std::span<const double> v);
// Kish effective size for normalized importance weights.
double kish_ess(std::span<const double> w);

struct Interval {
  double lo;
  double hi;
};

// Normal-approximation 95% confidence interval for the mean.
Interval mean_ci95(std::span<const double> v);

// Normalized 2D histogram on [lo, hi)^2 with bins x bins cells, row-major
// in the first coordinate; values outside the range go to the edge bins.
std::vector<double> histogram2d(std::span<const double> a, std::span<const double> b, double lo, double hi,
                                std::size_t bins);
double total_variation(std::span<const double> p, std::span<const double> q);

// Location of the maximum of a Gaussian kernel density estimate evaluated
// on `grid` points over [lo, hi], Silverman bandwidth.
double kde_mode(std::span<const double> v, double lo, double hi, std::size_t grid = 512);

}  // namespace stochcond
