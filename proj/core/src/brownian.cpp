#include "sdelab/brownian.hpp"

#include <bit>
#include <cmath>

#include "sdelab/errors.hpp"
#include "sdelab/random.hpp"

namespace sdelab {

BrownianPath generate_path(std::uint64_t seed, std::uint64_t path_index, double T,
                           std::size_t n_fine) {
  require(std::has_single_bit(n_fine), "n_fine must be a power of two");
  require(T > 0.0, "time horizon must be positive");
  BrownianPath path{T, n_fine, seed, path_index, std::vector<double>(n_fine)};
  const double scale = std::sqrt(T / static_cast<double>(n_fine));
  for (std::size_t k = 0; k < n_fine; ++k) {
    path.increments[k] = scale * counter_normal(seed, path_index, k);
  }
  return path;
}

std::vector<double> coarsen(const BrownianPath& path, std::size_t n) {
  require(n >= 1 && path.n_fine % n == 0, "coarse step count must divide n_fine");
  const std::size_t ratio = path.n_fine / n;
  if (ratio == 1) return path.increments;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t r = 0; r < ratio; ++r) s += path.increments[k * ratio + r];
    out[k] = s;
  }
  return out;
}

std::vector<double> brownian_values(const BrownianPath& path, std::size_t n) {
  const auto dw = coarsen(path, n);
  std::vector<double> w(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) w[k + 1] = w[k] + dw[k];
  return w;
}

}  // namespace sdelab
