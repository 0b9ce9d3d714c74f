#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sdelab {

// Brownian increments on a uniform grid of n_fine steps over [0, T].
// Increment k is sqrt(T/n_fine) * Z(seed, path_index, k), so a path is a
// pure function of (seed, path_index).
struct BrownianPath {
  double T = 1.0;
  std::size_t n_fine = 0;
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;
  std::vector<double> increments;
};

BrownianPath generate_path(std::uint64_t seed, std::uint64_t path_index, double T,
                           std::size_t n_fine);

// Increments on n | n_fine steps: consecutive block sums of the fine
// increments, summed left to right.
std::vector<double> coarsen(const BrownianPath& path, std::size_t n);

// W at the n+1 nodes of the n-step grid (left-to-right partial sums).
std::vector<double> brownian_values(const BrownianPath& path, std::size_t n);

}  // namespace sdelab
