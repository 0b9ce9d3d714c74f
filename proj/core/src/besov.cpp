#include "sdelab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "sdelab/errors.hpp"
#include "sdelab/loglog_fit.hpp"

namespace sdelab {
namespace {

// exp(-1/t) for t > 0, else 0.
double smooth_step_kernel(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

void require_block(const SpectralGrid& grid, int j) {
  require(j >= -1 && j <= grid.max_block(), "Littlewood-Paley block index out of range");
}

void require_gamma(double gamma) {
  require(gamma >= kMinBesovGamma && gamma <= kMaxBesovGamma,
          "Besov exponent outside supported range [-2, 3]");
}

}  // namespace

double DyadicPartition::cutoff(double r) {
  r = std::abs(r);
  if (r <= kPlateauEnd) return 1.0;
  if (r >= kSupportEnd) return 0.0;
  const double s = (kSupportEnd - r) / (kSupportEnd - kPlateauEnd);
  const double a = smooth_step_kernel(s);
  const double b = smooth_step_kernel(1.0 - s);
  return a / (a + b);
}

double DyadicPartition::weight(int j, double xi) {
  if (j < 0) return cutoff(xi);
  return cutoff(std::ldexp(xi, -(j + 1))) - cutoff(std::ldexp(xi, -j));
}

DyadicPartition::DyadicPartition(const SpectralGrid& grid) : grid_(grid) {
  for (int j = -1; j <= grid.max_block(); ++j) {
    std::vector<double> w(grid.num_modes());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = weight(j, grid.frequency(k));
    blocks_.push_back(std::move(w));
  }
}

double DyadicPartition::resolved_frequency() const {
  return kPlateauEnd * std::ldexp(1.0, max_block() + 1);
}

std::span<const double> DyadicPartition::weights(int j) const {
  require_block(grid_, j);
  return blocks_[static_cast<std::size_t>(j + 1)];
}

GridFunction lp_block(const GridFunction& f, int j) {
  require_block(f.grid(), j);
  return f.apply_multiplier([j](double xi) { return DyadicPartition::weight(j, xi); });
}

std::vector<BlockNorm> besov_table(const GridFunction& f, double gamma) {
  require_gamma(gamma);
  std::vector<BlockNorm> table;
  for (int j = -1; j <= f.grid().max_block(); ++j) {
    const double s = lp_block(f, j).sup_norm();
    table.push_back({j, s, std::exp2(j * gamma) * s});
  }
  return table;
}

double besov_norm(const GridFunction& f, double gamma) {
  double norm = 0.0;
  for (const auto& row : besov_table(f, gamma)) norm = std::max(norm, row.weighted);
  return norm;
}

void write_block_table_csv(std::ostream& out, std::span<const BlockNorm> table) {
  out << "j,block_sup,weighted\n";
  const auto old = out.precision(17);
  for (const auto& row : table) {
    out << row.j << ',' << row.block_sup << ',' << row.weighted << '\n';
  }
  out.precision(old);
}

double holder_norm(const GridFunction& f, double gamma) {
  const bool first_order = gamma > 0.0 && gamma < 1.0;
  const bool second_order = gamma > 1.0 && gamma < 2.0;
  require(first_order || second_order, "Hoelder exponent must lie in (0,1) or (1,2)");

  const SpectralGrid& grid = f.grid();
  double norm = f.sup_norm();
  std::span<const double> target = f.values();
  GridFunction fx = GridFunction::zero(grid);
  double exponent = gamma;
  if (second_order) {
    fx = f.derivative();
    norm += fx.sup_norm();
    target = fx.values();
    exponent = gamma - 1.0;
  }

  // Periodic pairs (i, i + s) with 0 < s * dx < 1.
  const std::size_t n = grid.size();
  const double dx = grid.spacing();
  auto max_shift = static_cast<std::size_t>(std::ceil(1.0 / dx)) - 1;
  max_shift = std::min(max_shift, n - 1);
  double seminorm = 0.0;
  for (std::size_t s = 1; s <= max_shift; ++s) {
    const double dist = static_cast<double>(s) * dx;
    if (dist >= 1.0) break;
    const double denom = std::pow(dist, exponent);
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      largest = std::max(largest, std::abs(target[i] - target[(i + s) % n]));
    }
    seminorm = std::max(seminorm, largest / denom);
  }
  return norm + seminorm;
}

GridFunction heat_semigroup(const GridFunction& f, double t) {
  require(t >= 0.0, "heat semigroup time must be non-negative");
  if (t == 0.0) return f;
  return f.apply_multiplier([t](double xi) { return std::exp(-0.5 * xi * xi * t); });
}

BernsteinReport check_bernstein(const GridFunction& f, double gamma) {
  BernsteinReport report;
  report.derivative_norm = besov_norm(f.derivative(), gamma);
  report.function_norm = besov_norm(f, gamma + 1.0);
  report.ratio =
      report.function_norm > 0.0 ? report.derivative_norm / report.function_norm : 0.0;
  return report;
}

SchauderReport check_schauder(const GridFunction& f, double gamma, double theta,
                              std::span<const double> times) {
  require(theta >= 0.0 && theta < 1.0, "Schauder theta must lie in [0, 1)");
  if (times.size() < 3) throw ValidationError("degenerate Schauder fit: need >= 3 times");
  require(f.sup_norm() > 0.0, "Schauder check needs a nonzero function");

  SchauderReport report;
  report.times.assign(times.begin(), times.end());
  for (double t : times) {
    require(t > 0.0, "Schauder sample times must be positive");
    const GridFunction smoothed = heat_semigroup(f, t);
    report.smoothing_norms.push_back(besov_norm(smoothed, gamma + 2.0 * theta));
    report.approximation_norms.push_back(besov_norm(smoothed - f, gamma));
  }
  const auto positive = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
  };
  if (!positive(report.smoothing_norms) || !positive(report.approximation_norms)) {
    throw ValidationError("degenerate Schauder fit: a norm vanished");
  }
  report.smoothing_slope = fit_loglog(report.times, report.smoothing_norms).slope;
  report.approximation_slope = fit_loglog(report.times, report.approximation_norms).slope;
  return report;
}

}  // namespace sdelab
