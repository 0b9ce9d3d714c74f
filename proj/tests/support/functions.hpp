#pragma once

#include <cmath>
#include <cstddef>
#include <random>

#include "sdelab/grid_function.hpp"
#include "sdelab/spectral_grid.hpp"

namespace testfn {

// Random trigonometric polynomial with modes 1..max_mode.
inline sdelab::GridFunction random_band_limited(const sdelab::SpectralGrid& grid,
                                                std::size_t max_mode, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  for (std::size_t k = 1; k <= max_mode; ++k) {
    a[k] = normal(rng);
    b[k] = normal(rng);
  }
  return sdelab::GridFunction::sample(grid, [&](double x) {
    double s = 0.0;
    for (std::size_t k = 1; k <= max_mode; ++k) {
      const double xi = grid.frequency(k);
      s += a[k] * std::cos(xi * x) + b[k] * std::sin(xi * x);
    }
    return s;
  });
}

inline sdelab::GridFunction single_mode(const sdelab::SpectralGrid& grid, std::size_t k,
                                        double amplitude, double phase = 0.0) {
  const double xi = grid.frequency(k);
  return sdelab::GridFunction::sample(
      grid, [&](double x) { return amplitude * std::sin(xi * x + phase); });
}

}  // namespace testfn
