#pragma once

#include <cstddef>

namespace sdelab {

// Uniform periodic grid on the circle [-L, L) with N = 2^q samples.
//
// Sample i sits at x_i = -L + 2L i / N and Fourier mode k (0 <= k <= N/2)
// has angular frequency xi_k = pi k / L. The highest Littlewood-Paley block
// kept is the largest j with 2^{j+1} strictly below the Nyquist frequency.
class SpectralGrid {
 public:
  static constexpr double kDefaultHalfLength = 16.0;
  static constexpr std::size_t kMinPoints = 64;

  SpectralGrid(double half_length, std::size_t num_points);

  double half_length() const { return half_length_; }
  double period() const { return 2.0 * half_length_; }
  std::size_t size() const { return num_points_; }
  std::size_t num_modes() const { return num_points_ / 2 + 1; }
  double spacing() const { return period() / static_cast<double>(num_points_); }
  double x(std::size_t i) const;
  double frequency(std::size_t k) const;
  double nyquist() const;
  int max_block() const { return max_block_; }

  // Mode index nearest to angular frequency `xi` (clamped to [0, N/2]).
  std::size_t nearest_mode(double xi) const;

  friend bool operator==(const SpectralGrid&, const SpectralGrid&) = default;

 private:
  double half_length_;
  std::size_t num_points_;
  int max_block_;
};

}  // namespace sdelab
