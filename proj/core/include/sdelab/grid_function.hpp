#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sdelab/spectral_grid.hpp"

namespace sdelab {

// A real periodic function (or band-limited distribution) on a SpectralGrid,
// held both as samples and as discrete Fourier coefficients.
//
// Both representations are populated at construction, so a GridFunction is
// always synchronized and can be shared read-only between threads.
class GridFunction {
 public:
  using Complex = std::complex<double>;

  static GridFunction from_values(const SpectralGrid& grid, std::vector<double> values);
  static GridFunction from_coefficients(const SpectralGrid& grid,
                                        std::vector<Complex> coefficients);
  static GridFunction zero(const SpectralGrid& grid);

  template <typename F>
  static GridFunction sample(const SpectralGrid& grid, F&& f) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(grid.x(i));
    return from_values(grid, std::move(values));
  }

  const SpectralGrid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<const Complex> coefficients() const { return coefficients_; }

  // max_i |f(x_i)|
  double sup_norm() const;

  // Multiplies mode k by multiplier(xi_k). The multiplier must be real and
  // even in xi so the result stays real.
  template <typename M>
  GridFunction apply_multiplier(M&& multiplier) const {
    std::vector<Complex> c(coefficients_.begin(), coefficients_.end());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= multiplier(grid_.frequency(k));
    return from_coefficients(grid_, std::move(c));
  }

  // Spectral derivative; the Nyquist mode is dropped.
  GridFunction derivative() const;

  // Trigonometric interpolant sampled on `factor * N` points of the same
  // circle (zero padding, Nyquist mode split symmetrically).
  std::vector<double> oversampled(std::size_t factor) const;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(double scale);

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(double s, GridFunction f) { return f *= s; }

 private:
  GridFunction(const SpectralGrid& grid, std::vector<double> values,
               std::vector<Complex> coefficients);

  SpectralGrid grid_;
  std::vector<double> values_;
  std::vector<Complex> coefficients_;
};

}  // namespace sdelab
