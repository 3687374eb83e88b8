// Apache License, Version 2.0, refer to LICENSE.txt

#include <gtest/gtest.h>

#include <omp.h>
#include <stdexcept>

#include "stochcond/kernels.hpp"
#include "stochcond/models/conjugate.hpp"

using namespace stochcond;

TEST(Kernels, MapIndexedSerialParallelIdentical) {
  omp_set_num_threads(4);
  std::vector<double> a(10007), b(10007);
  auto fn = [](std::size_t i) { return std::sin(static_cast<double>(i)) * 1e-3; };
  kernels::map_indexed(a, fn, Exec::serial);
  kernels::map_indexed(b, fn, Exec::parallel);
  EXPECT_EQ(a, b);
  EXPECT_EQ(kernels::ordered_sum(a), kernels::ordered_sum(b));
}

TEST(Kernels, ExceptionPropagatesFromParallelRegion) {
  omp_set_num_threads(4);
  std::vector<double> out(100);
  EXPECT_THROW(kernels::map_indexed(
                   out,
                   [](std::size_t i) -> double {
                     if (i == 57) throw std::runtime_error("boom");
                     return 0.0;
                   },
                   Exec::parallel),
               std::runtime_error);
}

TEST(Kernels, LogCondBatchMatchesPointwise) {
  omp_set_num_threads(4);
  GaussianModel m(0.0, 1.0, 0.5);
  std::vector<std::vector<double>> ys;
  for (int i = 0; i < 1000; ++i) ys.push_back({0.01 * i - 5});
  const std::vector<double> x{0.3};
  std::vector<double> s(ys.size()), p(ys.size());
  kernels::log_cond_batch(m, x, ys, s, Exec::serial);
  kernels::log_cond_batch(m, x, ys, p, Exec::parallel);
  EXPECT_EQ(s, p);
  for (std::size_t j = 0; j < ys.size(); ++j) EXPECT_EQ(s[j], m.log_cond(x, ys[j]));
}

TEST(Kernels, OrderedSumIsLeftFold) {
  const std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  EXPECT_EQ(kernels::ordered_sum(v), ((1e16 + 1.0) - 1e16) + 1.0);
  EXPECT_EQ(kernels::ordered_sum(std::vector<double>{}), 0.0);
}
