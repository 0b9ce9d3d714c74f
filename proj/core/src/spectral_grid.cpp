#include "sdelab/spectral_grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "sdelab/errors.hpp"

namespace sdelab {

SpectralGrid::SpectralGrid(double half_length, std::size_t num_points)
    : half_length_(half_length), num_points_(num_points), max_block_(-1) {
  require(std::isfinite(half_length) && half_length > 0.0,
          "grid half-length must be positive");
  require(std::has_single_bit(num_points) && num_points >= kMinPoints,
          "grid size must be a power of two >= 64");
  const double nyq = nyquist();
  while (std::ldexp(1.0, max_block_ + 2) < nyq) ++max_block_;
  require(max_block_ >= 0, "grid too coarse: no dyadic block below Nyquist");
}

double SpectralGrid::x(std::size_t i) const {
  return -half_length_ + period() * static_cast<double>(i) /
                             static_cast<double>(num_points_);
}

double SpectralGrid::frequency(std::size_t k) const {
  return std::numbers::pi * static_cast<double>(k) / half_length_;
}

double SpectralGrid::nyquist() const {
  return std::numbers::pi * static_cast<double>(num_points_) / period();
}

std::size_t SpectralGrid::nearest_mode(double xi) const {
  const double k = std::round(std::abs(xi) * half_length_ / std::numbers::pi);
  return static_cast<std::size_t>(
      std::clamp(k, 0.0, static_cast<double>(num_points_ / 2)));
}

}  // namespace sdelab
