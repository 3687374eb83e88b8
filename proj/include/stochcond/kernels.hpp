// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

// Data-parallel loops. Every kernel has a serial reference and an OpenMP
// version computing the same per-item values; reductions happen afterwards
// in index order, so results are bit-identical for any thread count.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "stochcond/model.hpp"

namespace stochcond {

enum class Exec { serial, parallel };

namespace kernels {

template <class F>
void map_indexed_serial(std::span<double> out, F&& fn) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(i);
}

// Exceptions thrown by fn are captured and the first one is rethrown after
// the parallel region.
template <class F>
void map_indexed_parallel(std::span<double> out, F&& fn) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(stochcond_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

template <class F>
void map_indexed(std::span<double> out, F&& fn, Exec exec) {
  if (exec == Exec::parallel) {
    map_indexed_parallel(out, fn);
  } else {
    map_indexed_serial(out, fn);
  }
}

// out[j] = log p(ys[j] | x).
void log_cond_batch_serial(const Model& model, std::span<const double> x,
                           std::span<const std::vector<double>> ys, std::span<double> out);
void log_cond_batch_parallel(const Model& model, std::span<const double> x,
                             std::span<const std::vector<double>> ys, std::span<double> out);
void log_cond_batch(const Model& model, std::span<const double> x, std::span<const std::vector<double>> ys,
                    std::span<double> out, Exec exec);

// Sum of a vector in index order (the only reduction kernels use).
double ordered_sum(std::span<const double> v);

}  // namespace kernels
}  // namespace stochcond
