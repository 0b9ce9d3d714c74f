#include "sdelab/drift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "sdelab/besov.hpp"
#include "sdelab/errors.hpp"
#include "sdelab/random.hpp"

namespace sdelab {
namespace {

// Stream tag for phase draws, distinct from Brownian path indices.
constexpr std::uint64_t kPhaseStream = 0x70686173652d6a00ULL;

double phase(std::uint64_t seed, int block) {
  return 2.0 * std::numbers::pi *
         counter_uniform(seed, kPhaseStream, static_cast<std::uint64_t>(block + 1));
}

// sum_j amplitude(j) cos(xi_j x + phase_j) as coefficients.
GridFunction lacunary_sum(const SpectralGrid& grid, std::uint64_t seed,
                          auto&& amplitude) {
  std::vector<GridFunction::Complex> c(grid.num_modes());
  for (const auto& mode : lacunary_modes(grid)) {
    // cos(theta) = (e^{i theta} + e^{-i theta}) / 2, phase measured from x = -L.
    const double shift = mode.frequency * (-grid.half_length()) + phase(seed, mode.block);
    c[mode.mode] += 0.5 * amplitude(mode) * std::polar(1.0, shift);
  }
  return GridFunction::from_coefficients(grid, std::move(c));
}

}  // namespace

std::string to_string(DriftKind kind) {
  switch (kind) {
    case DriftKind::smooth_benchmark: return "smooth_benchmark";
    case DriftKind::holder_function: return "holder_function";
    case DriftKind::distributional_derivative: return "distributional_derivative";
    case DriftKind::constant: return "constant";
    case DriftKind::sine: return "sine";
  }
  return "unknown";
}

std::string to_string(TimeModulation modulation) {
  return modulation == TimeModulation::constant ? "constant" : "sqrt_ramp";
}

DriftKind parse_drift_kind(const std::string& name) {
  if (name == "smooth_benchmark" || name == "ou") return DriftKind::smooth_benchmark;
  if (name == "holder_function" || name == "holder") return DriftKind::holder_function;
  if (name == "distributional_derivative" || name == "distributional")
    return DriftKind::distributional_derivative;
  if (name == "constant") return DriftKind::constant;
  if (name == "sine" || name == "sin") return DriftKind::sine;
  throw ValidationError("unknown drift kind '" + name + "'");
}

TimeModulation parse_time_modulation(const std::string& name) {
  if (name == "constant") return TimeModulation::constant;
  if (name == "sqrt_ramp") return TimeModulation::sqrt_ramp;
  throw ValidationError("unknown time modulation '" + name + "'");
}

double time_factor(TimeModulation modulation, double t) {
  return modulation == TimeModulation::constant ? 1.0 : std::sqrt(t + kSqrtRampOffset);
}

double time_half_holder_seminorm(TimeModulation modulation, double T,
                                 std::size_t samples) {
  require(samples >= 2, "time grid needs at least two samples");
  require(T > 0.0, "time horizon must be positive");
  std::vector<double> g(samples);
  const double dt = T / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    g[i] = time_factor(modulation, dt * static_cast<double>(i));
  }
  double seminorm = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t k = i + 1; k < samples; ++k) {
      const double gap = dt * static_cast<double>(k - i);
      seminorm = std::max(seminorm, std::abs(g[k] - g[i]) / std::sqrt(gap));
    }
  }
  return seminorm;
}

std::vector<LacunaryMode> lacunary_modes(const SpectralGrid& grid) {
  std::vector<LacunaryMode> modes;
  for (int j = 0; j <= grid.max_block(); ++j) {
    const double lo = std::ldexp(1.0, j);
    const double hi = 1.5 * lo;
    std::size_t k = grid.nearest_mode(1.25 * lo);
    while (k > 0 && grid.frequency(k) > hi) --k;
    while (grid.frequency(k) < lo && k < grid.size() / 2) ++k;
    const double xi = grid.frequency(k);
    if (xi < lo || xi > hi) continue;
    modes.push_back({j, k, xi});
  }
  return modes;
}

GridFunction build_drift(const DriftSpec& spec, const SpectralGrid& grid) {
  require(std::isfinite(spec.amplitude), "drift amplitude must be finite");
  const double a = spec.amplitude;
  switch (spec.kind) {
    case DriftKind::smooth_benchmark: {
      const double L = grid.half_length();
      return GridFunction::sample(grid, [&](double x) {
        return -a * (L / std::numbers::pi) * std::sin(std::numbers::pi * x / L);
      });
    }
    case DriftKind::holder_function: {
      const double alpha = spec.holder_exponent;
      require(alpha > 0.0 && alpha < 1.0, "Hoelder exponent must lie in (0,1)");
      return a * lacunary_sum(grid, spec.seed, [alpha](const LacunaryMode& m) {
               return std::exp2(-m.block * alpha);
             });
    }
    case DriftKind::distributional_derivative: {
      const double beta = spec.beta;
      require(beta > 0.0 && beta < 0.5, "distributional drift needs beta in (0, 1/2)");
      const GridFunction primitive =
          lacunary_sum(grid, spec.seed, [beta](const LacunaryMode& m) {
            return std::exp2(-m.block * (1.0 - beta));
          });
      return a * primitive.derivative();
    }
    case DriftKind::constant:
      return GridFunction::from_values(grid, std::vector<double>(grid.size(), a));
    case DriftKind::sine: {
      const std::size_t k = grid.nearest_mode(spec.frequency);
      require(std::abs(grid.frequency(k) - std::abs(spec.frequency)) <
                  1e-9 * std::max(1.0, std::abs(spec.frequency)),
              "sine frequency is not a grid frequency");
      const double xi = spec.frequency;
      return GridFunction::sample(grid, [&](double x) { return a * std::sin(xi * x); });
    }
  }
  throw ValidationError("unknown drift kind");
}

DriftBounds assemble_bounds(double sup_norm, double lip_norm, double time_seminorm,
                            double p) {
  require(p >= 1.0, "bound exponent p must be >= 1");
  DriftBounds b;
  b.sup_norm = sup_norm;
  b.lip_norm = lip_norm;
  b.time_seminorm = time_seminorm;
  b.p = p;
  b.A_m = sup_norm * (1.0 + lip_norm);
  b.B_m = lip_norm + time_seminorm;
  b.C_m = std::pow(sup_norm, p) * (std::pow(lip_norm, p) + 1.0);
  b.D_m = std::pow(lip_norm, p) + std::pow(time_seminorm, p);
  return b;
}

MollifiedDrift::MollifiedDrift(const GridFunction& raw_profile, std::size_t m,
                               TimeModulation modulation, std::optional<DriftSpec> spec)
    : raw_(raw_profile),
      profile_(GridFunction::zero(raw_profile.grid())),
      m_(m),
      modulation_(modulation),
      spec_(std::move(spec)) {
  require(m >= 1, "mollification parameter m must be >= 1");
  profile_ = heat_semigroup(raw_, 1.0 / static_cast<double>(m));

  table_ = profile_.oversampled(kOversample);
  // Knots that coincide with grid points carry the grid values exactly.
  const auto values = profile_.values();
  for (std::size_t i = 0; i < values.size(); ++i) table_[i * kOversample] = values[i];
  profile_sup_ = 0.0;
  for (double v : table_) profile_sup_ = std::max(profile_sup_, std::abs(v));
  table_.push_back(table_.front());
  inv_table_step_ =
      static_cast<double>(grid().size() * kOversample) / grid().period();

  profile_lip_ = 0.0;
  for (double v : profile_.derivative().oversampled(kOversample)) {
    profile_lip_ = std::max(profile_lip_, std::abs(v));
  }
}

double MollifiedDrift::evaluate_profile(double x) const {
  const std::size_t cells = table_.size() - 1;
  const double s = (x + grid().half_length()) * inv_table_step_;
  double cell = std::floor(s);
  const double w = s - cell;
  if (cell < 0.0 || cell >= static_cast<double>(cells)) {
    cell = std::fmod(cell, static_cast<double>(cells));
    if (cell < 0.0) cell += static_cast<double>(cells);
  }
  const auto i = static_cast<std::size_t>(cell);
  return table_[i] + w * (table_[i + 1] - table_[i]);
}

MollifiedDrift mollify(const DriftSpec& spec, std::size_t m, const SpectralGrid& grid) {
  require(m >= 1, "mollification parameter m must be >= 1");
  return MollifiedDrift(build_drift(spec, grid), m, spec.time_modulation, spec);
}

DriftBounds compute_bounds(const MollifiedDrift& drift, double p, std::size_t time_grid,
                           double T) {
  require(time_grid >= 2, "degenerate time grid for the 1/2-Hoelder scan");
  double g_max = 0.0;
  const double dt = T / static_cast<double>(time_grid - 1);
  for (std::size_t i = 0; i < time_grid; ++i) {
    g_max = std::max(g_max,
                     std::abs(time_factor(drift.time_modulation(), dt * static_cast<double>(i))));
  }
  const double time_seminorm =
      time_half_holder_seminorm(drift.time_modulation(), T, time_grid) * drift.profile_sup();
  return assemble_bounds(g_max * drift.profile_sup(), g_max * drift.profile_lip(),
                         time_seminorm, p);
}

void write_profile_csv(std::ostream& out, const GridFunction& profile) {
  out << "x,value\n";
  const auto old = out.precision(17);
  const auto values = profile.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << profile.grid().x(i) << ',' << values[i] << '\n';
  }
  out.precision(old);
}

void write_block_amplitudes_csv(std::ostream& out, const GridFunction& profile) {
  out << "j,amplitude\n";
  const auto old = out.precision(17);
  for (const auto& row : besov_table(profile, 0.0)) {
    out << row.j << ',' << row.block_sup << '\n';
  }
  out.precision(old);
}

}  // namespace sdelab
