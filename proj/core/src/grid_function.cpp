#include "sdelab/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fft.hpp"
#include "sdelab/errors.hpp"

namespace sdelab {

GridFunction::GridFunction(const SpectralGrid& grid, std::vector<double> values,
                           std::vector<Complex> coefficients)
    : grid_(grid), values_(std::move(values)), coefficients_(std::move(coefficients)) {}

GridFunction GridFunction::from_values(const SpectralGrid& grid,
                                       std::vector<double> values) {
  require(values.size() == grid.size(), "sample count does not match grid");
  auto coefficients = detail::forward_fft(values);
  return GridFunction(grid, std::move(values), std::move(coefficients));
}

GridFunction GridFunction::from_coefficients(const SpectralGrid& grid,
                                             std::vector<Complex> coefficients) {
  require(coefficients.size() == grid.num_modes(),
          "coefficient count does not match grid");
  // Modes 0 and N/2 are their own conjugates.
  coefficients.front().imag(0.0);
  coefficients.back().imag(0.0);
  auto values = detail::inverse_fft(coefficients, grid.size());
  return GridFunction(grid, std::move(values), std::move(coefficients));
}

GridFunction GridFunction::zero(const SpectralGrid& grid) {
  return GridFunction(grid, std::vector<double>(grid.size(), 0.0),
                      std::vector<Complex>(grid.num_modes(), Complex{}));
}

double GridFunction::sup_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

GridFunction GridFunction::derivative() const {
  std::vector<Complex> c(coefficients_.size());
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    c[k] = Complex(0.0, grid_.frequency(k)) * coefficients_[k];
  }
  c.back() = Complex{};
  return from_coefficients(grid_, std::move(c));
}

std::vector<double> GridFunction::oversampled(std::size_t factor) const {
  require(factor >= 1, "oversampling factor must be >= 1");
  if (factor == 1) return values_;
  std::vector<Complex> padded(coefficients_.begin(), coefficients_.end());
  padded.back() *= 0.5;
  return detail::inverse_fft(padded, grid_.size() * factor);
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require(grid_ == other.grid_, "grid mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  for (std::size_t k = 0; k < coefficients_.size(); ++k)
    coefficients_[k] += other.coefficients_[k];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require(grid_ == other.grid_, "grid mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  for (std::size_t k = 0; k < coefficients_.size(); ++k)
    coefficients_[k] -= other.coefficients_[k];
  return *this;
}

GridFunction& GridFunction::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  for (Complex& c : coefficients_) c *= scale;
  return *this;
}

}  // namespace sdelab
