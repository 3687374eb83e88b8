// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

// Forward-mode automatic differentiation with a fixed number of tangent
// directions. Models write their log-densities once as templates over the
// scalar type; instantiating with Dual<N> yields the full gradient in one
// pass, which is cheap for the handful of latents the case studies have.

#include <array>
#include <cmath>
#include <cstddef>

namespace stochcond::ad {

template <std::size_t N>
struct Dual {
  double val = 0.0;
  std::array<double, N> d{};

  Dual() = default;
  Dual(double v) : val(v) {}  // NOLINT: implicit lift of constants
  Dual(double v, const std::array<double, N>& t) : val(v), d(t) {}

  static Dual variable(double v, std::size_t i) {
    Dual r(v);
    r.d[i] = 1.0;
    return r;
  }

  Dual& operator+=(const Dual& o) {
    val += o.val;
    for (std::size_t i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    val -= o.val;
    for (std::size_t i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (std::size_t i = 0; i < N; ++i) d[i] = d[i] * o.val + val * o.d[i];
    val *= o.val;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const double inv = 1.0 / o.val;
    for (std::size_t i = 0; i < N; ++i) d[i] = (d[i] - val * inv * o.d[i]) * inv;
    val *= inv;
    return *this;
  }
};

// Applies a scalar function with known derivative to a dual number.
template <std::size_t N>
Dual<N> chain(const Dual<N>& x, double fx, double dfx) {
  Dual<N> r(fx);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = dfx * x.d[i];
  return r;
}

template <std::size_t N>
Dual<N> operator+(Dual<N> a, const Dual<N>& b) { return a += b; }
template <std::size_t N>
Dual<N> operator-(Dual<N> a, const Dual<N>& b) { return a -= b; }
template <std::size_t N>
Dual<N> operator*(Dual<N> a, const Dual<N>& b) { return a *= b; }
template <std::size_t N>
Dual<N> operator/(Dual<N> a, const Dual<N>& b) { return a /= b; }

template <std::size_t N>
Dual<N> operator+(Dual<N> a, double b) { a.val += b; return a; }
template <std::size_t N>
Dual<N> operator+(double a, Dual<N> b) { b.val += a; return b; }
template <std::size_t N>
Dual<N> operator-(Dual<N> a, double b) { a.val -= b; return a; }
template <std::size_t N>
Dual<N> operator-(double a, const Dual<N>& b) { return Dual<N>(a) - b; }
template <std::size_t N>
Dual<N> operator*(Dual<N> a, double b) {
  a.val *= b;
  for (auto& t : a.d) t *= b;
  return a;
}
template <std::size_t N>
Dual<N> operator*(double a, Dual<N> b) { return b * a; }
template <std::size_t N>
Dual<N> operator/(Dual<N> a, double b) { return a * (1.0 / b); }
template <std::size_t N>
Dual<N> operator/(double a, const Dual<N>& b) { return Dual<N>(a) / b; }

template <std::size_t N>
Dual<N> operator-(Dual<N> a) {
  a.val = -a.val;
  for (auto& t : a.d) t = -t;
  return a;
}

template <std::size_t N>
bool operator<(const Dual<N>& a, const Dual<N>& b) { return a.val < b.val; }
template <std::size_t N>
bool operator>(const Dual<N>& a, const Dual<N>& b) { return a.val > b.val; }

template <std::size_t N>
Dual<N> exp(const Dual<N>& x) {
  const double e = std::exp(x.val);
  return chain(x, e, e);
}
template <std::size_t N>
Dual<N> log(const Dual<N>& x) { return chain(x, std::log(x.val), 1.0 / x.val); }
template <std::size_t N>
Dual<N> log1p(const Dual<N>& x) { return chain(x, std::log1p(x.val), 1.0 / (1.0 + x.val)); }
template <std::size_t N>
Dual<N> expm1(const Dual<N>& x) { return chain(x, std::expm1(x.val), std::exp(x.val)); }
template <std::size_t N>
Dual<N> sqrt(const Dual<N>& x) {
  const double s = std::sqrt(x.val);
  return chain(x, s, 0.5 / s);
}

template <std::size_t N>
bool isfinite(const Dual<N>& x) { return std::isfinite(x.val); }

inline double value_of(double x) { return x; }
template <std::size_t N>
double value_of(const Dual<N>& x) { return x.val; }

}  // namespace stochcond::ad
