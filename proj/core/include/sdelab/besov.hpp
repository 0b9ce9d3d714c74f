#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sdelab/grid_function.hpp"
#include "sdelab/spectral_grid.hpp"

namespace sdelab {

// Smooth dyadic partition of unity on the grid's frequencies.
//
// chi(r) = 1 on [0, 3/4], 0 on [1, inf), C^infinity in between. Then
//   w_{-1}(xi) = chi(|xi|),   w_j(xi) = chi(|xi| / 2^{j+1}) - chi(|xi| / 2^j).
// w_j is supported in [3/4 * 2^j, 2^{j+1}] and equals 1 on [2^j, 3/2 * 2^j].
// The sum over j <= max_block telescopes to chi(|xi| / 2^{max_block+1}), which
// is 1 for every resolved frequency |xi| <= 3/2 * 2^{max_block}.
class DyadicPartition {
 public:
  static constexpr double kPlateauEnd = 0.75;
  static constexpr double kSupportEnd = 1.0;

  explicit DyadicPartition(const SpectralGrid& grid);

  static double cutoff(double r);
  static double weight(int j, double xi);

  int min_block() const { return -1; }
  int max_block() const { return grid_.max_block(); }
  // Highest |xi| at which the truncated partition still sums to one.
  double resolved_frequency() const;

  // Weights of block j at every mode k = 0..N/2.
  std::span<const double> weights(int j) const;

 private:
  SpectralGrid grid_;
  std::vector<std::vector<double>> blocks_;
};

struct BlockNorm {
  int j;
  double block_sup;
  double weighted;  // 2^{j gamma} * block_sup
};

inline constexpr double kMinBesovGamma = -2.0;
inline constexpr double kMaxBesovGamma = 3.0;

// (w_j f^)^v for -1 <= j <= max_block.
GridFunction lp_block(const GridFunction& f, int j);

// sup_j 2^{j gamma} ||(w_j f^)^v||_inf over resolved blocks.
double besov_norm(const GridFunction& f, double gamma);
std::vector<BlockNorm> besov_table(const GridFunction& f, double gamma);
void write_block_table_csv(std::ostream& out, std::span<const BlockNorm> table);

// ||f||_inf + sup_{0<|x-y|<1} |f(x)-f(y)| / |x-y|^gamma for gamma in (0,1);
// for gamma in (1,2) the sup-norm of f' is added and the seminorm is taken
// on f'. Pairs are grid pairs, so the seminorm is a lower bound of the true
// supremum.
double holder_norm(const GridFunction& f, double gamma);

// P_t = exp(t/2 d_xx): mode xi is damped by exp(-xi^2 t / 2).
GridFunction heat_semigroup(const GridFunction& f, double t);

struct BernsteinReport {
  double derivative_norm;  // ||f'||_gamma
  double function_norm;    // ||f||_{gamma+1}
  double ratio;            // 0 when f = 0
};
BernsteinReport check_bernstein(const GridFunction& f, double gamma);

struct SchauderReport {
  std::vector<double> times;
  std::vector<double> smoothing_norms;      // ||P_t f||_{gamma + 2 theta}
  std::vector<double> approximation_norms;  // ||P_t f - f||_gamma
  double smoothing_slope;
  double approximation_slope;
};
// Log-log slopes in t of both Schauder quantities. Needs >= 3 sample times.
SchauderReport check_schauder(const GridFunction& f, double gamma, double theta,
                              std::span<const double> times);

}  // namespace sdelab
