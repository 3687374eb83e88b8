// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/kernels.hpp"

namespace stochcond::kernels {

void log_cond_batch_serial(const Model& model, std::span<const double> x,
                           std::span<const std::vector<double>> ys, std::span<double> out) {
  map_indexed_serial(out, [&](std::size_t j) { return model.log_cond(x, ys[j]); });
}

void log_cond_batch_parallel(const Model& model, std::span<const double> x,
                             std::span<const std::vector<double>> ys, std::span<double> out) {
  map_indexed_parallel(out, [&](std::size_t j) { return model.log_cond(x, ys[j]); });
}

void log_cond_batch(const Model& model, std::span<const double> x, std::span<const std::vector<double>> ys,
                    std::span<double> out, Exec exec) {
  if (exec == Exec::parallel) {
    log_cond_batch_parallel(model, x, ys, out);
  } else {
    log_cond_batch_serial(model, x, ys, out);
  }
}

double ordered_sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace stochcond::kernels
