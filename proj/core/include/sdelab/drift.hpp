#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdelab/grid_function.hpp"
#include "sdelab/spectral_grid.hpp"

namespace sdelab {

enum class DriftKind {
  smooth_benchmark,           // -(L/pi) sin(pi x / L) = -x + O(x^3)
  holder_function,            // lacunary Weierstrass sum, exponent holder_exponent
  distributional_derivative,  // F' with F lacunary, block amplitudes 2^{j beta}
  constant,                   // amplitude everywhere
  sine,                       // amplitude * sin(frequency * x)
};

enum class TimeModulation {
  constant,   // g(t) = 1
  sqrt_ramp,  // g(t) = sqrt(t + 0.01)
};

std::string to_string(DriftKind kind);
std::string to_string(TimeModulation modulation);
DriftKind parse_drift_kind(const std::string& name);
TimeModulation parse_time_modulation(const std::string& name);

struct DriftSpec {
  DriftKind kind = DriftKind::smooth_benchmark;
  double beta = 0.25;
  double holder_exponent = 0.6;
  double amplitude = 1.0;
  double frequency = 1.0;  // sine only; must be a grid frequency
  std::uint64_t seed = 0;
  TimeModulation time_modulation = TimeModulation::constant;
};

inline constexpr double kSqrtRampOffset = 0.01;

double time_factor(TimeModulation modulation, double t);
// sup over pairs of a uniform grid on [0,T] of |g(t)-g(s)| / |t-s|^{1/2}.
double time_half_holder_seminorm(TimeModulation modulation, double T, std::size_t samples);

// One frequency per dyadic block: the grid mode nearest 5/4 * 2^j, moved into
// the block plateau [2^j, 3/2 * 2^j] if rounding pushed it out. Blocks whose
// plateau holds no grid mode are skipped.
struct LacunaryMode {
  int block;
  std::size_t mode;
  double frequency;
};
std::vector<LacunaryMode> lacunary_modes(const SpectralGrid& grid);

// Raw (unmollified) spatial profile of the drift.
GridFunction build_drift(const DriftSpec& spec, const SpectralGrid& grid);

struct DriftBounds {
  double sup_norm = 0.0;       // ||b^m||_{inf,L^inf}
  double lip_norm = 0.0;       // ||b^m_x||_{inf,L^inf}
  double time_seminorm = 0.0;  // [b^m]_{1/2,L^inf}
  double p = 2.0;
  double A_m = 0.0;
  double B_m = 0.0;
  double C_m = 0.0;
  double D_m = 0.0;
};

// A_m = s (1 + l), B_m = l + h, C_m = s^p (l^p + 1), D_m = l^p + h^p.
DriftBounds assemble_bounds(double sup_norm, double lip_norm, double time_seminorm,
                            double p);

// b^m(t, x) = g(t) (P_{1/m} b0)(x) with pointwise evaluation by linear
// interpolation on an oversampled trigonometric interpolant. Immutable.
class MollifiedDrift {
 public:
  static constexpr std::size_t kOversample = 8;

  MollifiedDrift(const GridFunction& raw_profile, std::size_t m,
                 TimeModulation modulation = TimeModulation::constant,
                 std::optional<DriftSpec> spec = std::nullopt);

  std::size_t m() const { return m_; }
  const SpectralGrid& grid() const { return profile_.grid(); }
  const GridFunction& space_profile() const { return profile_; }
  const GridFunction& raw_profile() const { return raw_; }
  TimeModulation time_modulation() const { return modulation_; }
  const std::optional<DriftSpec>& spec() const { return spec_; }

  double evaluate(double t, double x) const {
    return time_factor(modulation_, t) * evaluate_profile(x);
  }
  double evaluate_profile(double x) const;

  // Norms of the spatial profile (and its derivative) on the oversampled table.
  double profile_sup() const { return profile_sup_; }
  double profile_lip() const { return profile_lip_; }

  std::span<const double> table() const { return table_; }

 private:
  GridFunction raw_;
  GridFunction profile_;
  std::size_t m_;
  TimeModulation modulation_;
  std::optional<DriftSpec> spec_;
  std::vector<double> table_;  // kOversample*N samples plus a wrap-around copy
  double inv_table_step_;
  double profile_sup_;
  double profile_lip_;
};

MollifiedDrift mollify(const DriftSpec& spec, std::size_t m, const SpectralGrid& grid);

DriftBounds compute_bounds(const MollifiedDrift& drift, double p, std::size_t time_grid,
                           double T = 1.0);

// CSV dumps: (x, value) and (j, amplitude).
void write_profile_csv(std::ostream& out, const GridFunction& profile);
void write_block_amplitudes_csv(std::ostream& out, const GridFunction& profile);

}  // namespace sdelab
