#pragma once

// Reference implementations that share no code with the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

inline big rate_r(const big& beta, const big& eps) {
  const big q = big(1) / 2 - beta - eps;
  return q * q / (1 + beta + eps + 2 * q * q);
}

inline big eta(const big& beta_hat, const big& eps) {
  const big q = big(1) / 2 - beta_hat - eps;
  return 1 / (2 * ((eps + beta_hat + 1) / 2 + q * q));
}

// Backward PDE u_t + 1/2 u_xx + b(x) u_x = lambda u - b(x), u(T) = 0 on the
// 2pi-periodic circle, written in tau = T - t and marched with RK4 and
// fourth-order central differences. Returns u(0, x_i), x_i = -pi + 2 pi i/N.
inline std::vector<double> fd_backward_pde(const std::function<double(double)>& b,
                                           double lambda, double T, std::size_t N,
                                           std::size_t steps) {
  const double dx = 2.0 * std::numbers::pi / static_cast<double>(N);
  std::vector<double> bx(N);
  for (std::size_t i = 0; i < N; ++i) bx[i] = b(-std::numbers::pi + dx * static_cast<double>(i));
  auto at = [N](const std::vector<double>& v, long i) {
    const long n = static_cast<long>(N);
    return v[static_cast<std::size_t>(((i % n) + n) % n)];
  };
  auto rhs = [&](const std::vector<double>& u) {
    std::vector<double> out(N);
    for (std::size_t k = 0; k < N; ++k) {
      const long i = static_cast<long>(k);
      const double ux = (-at(u, i + 2) + 8.0 * at(u, i + 1) - 8.0 * at(u, i - 1) + at(u, i - 2)) /
                        (12.0 * dx);
      const double uxx = (-at(u, i + 2) + 16.0 * at(u, i + 1) - 30.0 * u[k] +
                          16.0 * at(u, i - 1) - at(u, i - 2)) /
                         (12.0 * dx * dx);
      out[k] = 0.5 * uxx + bx[k] * ux - lambda * u[k] + bx[k];
    }
    return out;
  };
  std::vector<double> u(N, 0.0), tmp(N);
  const double dt = T / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto k1 = rhs(u);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
    const auto k2 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
    const auto k3 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = u[i] + dt * k3[i];
    const auto k4 = rhs(tmp);
    for (std::size_t i = 0; i < N; ++i) u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return u;
}

// OU dX = -X dt + dW, X_0 = x0, driven by the given fine increments:
// X_t = x0 e^{-t} + W_t - int_0^t e^{-(t-s)} W_s ds, with the last integral
// advanced exactly in e^{-h} and by the trapezoid rule in W (O(h^2) per path).
inline std::vector<double> ou_path(const std::vector<double>& increments, double T, double x0) {
  const std::size_t n = increments.size();
  const double h = T / static_cast<double>(n);
  const double decay = std::exp(-h);
  std::vector<double> x(n + 1);
  x[0] = x0;
  double w = 0.0, z = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w_next = w + increments[k];
    z = decay * z + 0.5 * h * (decay * w + w_next);
    w = w_next;
    x[k + 1] = x0 * std::exp(-h * static_cast<double>(k + 1)) + w - z;
  }
  return x;
}

}  // namespace oracle
