#include "sdelab/zvonkin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "fft.hpp"
#include "sdelab/errors.hpp"

namespace sdelab {
namespace {

using Complex = GridFunction::Complex;
using Spectrum = std::vector<Complex>;

// Integral weights of a linear interpolant against exp(-a tau) on [0, h]:
//   int_0^h e^{-a tau} (1 - tau/h) dtau  and  int_0^h e^{-a tau} tau/h dtau.
struct EtdWeights {
  double decay;  // e^{-a h}
  double left;
  double right;
};

EtdWeights etd_weights(double a, double h) {
  const double z = a * h;
  double phi1, phi2;  // int e^{-a tau}, int e^{-a tau} tau/h
  if (z < 0.1) {
    // Series in z: phi1/h = sum (-z)^n/(n+1)!, phi2/h = sum (-z)^n/(n!(n+2)).
    double term = 1.0, s1 = 0.0, s2 = 0.0;
    for (int n = 0; n < 12; ++n) {
      s1 += term / (n + 1);
      s2 += term / (n + 2);
      term *= -z / (n + 1);
    }
    phi1 = h * s1;
    phi2 = h * s2;
  } else {
    const double e = std::exp(-z);
    phi1 = -std::expm1(-z) / a;
    phi2 = (1.0 - e * (1.0 + z)) / (a * z);
  }
  return {std::exp(-z), phi1 - phi2, phi2};
}

// Discretised mild map. Writing the equation with the lambda term moved into
// the propagator,
//   u(t) = int_t^T e^{-lambda (s-t)} P_{s-t} [ b(s) (1 + u_x(s)) ] ds,
// the forcing is interpolated linearly in time between nodes and integrated
// exactly against the propagator mode by mode.
class MildMap {
 public:
  MildMap(const MollifiedDrift& drift, double lambda, double T, std::size_t intervals)
      : drift_(drift), grid_(drift.grid()), lambda_(lambda) {
    const double h = T / static_cast<double>(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) times_.push_back(h * static_cast<double>(i));
    times_.back() = T;
    profile_fine_ = drift.space_profile().oversampled(2);
    weights_.reserve(grid_.num_modes());
    for (std::size_t k = 0; k < grid_.num_modes(); ++k) {
      const double xi = grid_.frequency(k);
      weights_.push_back(etd_weights(lambda + 0.5 * xi * xi, h));
    }
  }

  const std::vector<double>& times() const { return times_; }

  // Forcing b(t_i) (1 + u_x(t_i)) in coefficient space; the product is formed
  // on a 2x grid so it is alias-free.
  Spectrum forcing(std::size_t node, const Spectrum& ux) const {
    const std::size_t n = grid_.size();
    const std::vector<double> ux_fine = detail::inverse_fft(ux, 2 * n);
    const double g = time_factor(drift_.time_modulation(), times_[node]);
    std::vector<double> product(2 * n);
    for (std::size_t j = 0; j < product.size(); ++j) {
      product[j] = g * profile_fine_[j] * (1.0 + ux_fine[j]);
    }
    Spectrum full = detail::forward_fft(product);
    Spectrum out(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(grid_.num_modes()));
    out.back() = Complex(2.0 * out.back().real(), 0.0);
    return out;
  }

  std::vector<Spectrum> apply(const std::vector<Spectrum>& ux) const {
    const std::size_t nodes = times_.size();
    std::vector<Spectrum> g(nodes);
    for (std::size_t i = 0; i < nodes; ++i) g[i] = forcing(i, ux[i]);
    std::vector<Spectrum> u(nodes, Spectrum(grid_.num_modes()));
    for (std::size_t i = nodes - 1; i-- > 0;) {
      for (std::size_t k = 0; k < grid_.num_modes(); ++k) {
        const auto& w = weights_[k];
        u[i][k] = w.decay * u[i + 1][k] + w.left * g[i][k] + w.right * g[i + 1][k];
      }
    }
    return u;
  }

  Spectrum derivative(const Spectrum& u) const {
    Spectrum d(u.size());
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
      d[k] = Complex(0.0, grid_.frequency(k)) * u[k];
    }
    return d;
  }

  double sup_distance(const std::vector<Spectrum>& a, const std::vector<Spectrum>& b) const {
    double dist = 0.0;
    Spectrum diff(grid_.num_modes());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = a[i][k] - b[i][k];
      for (double v : detail::inverse_fft(diff, grid_.size())) {
        dist = std::max(dist, std::abs(v));
      }
    }
    return dist;
  }

 private:
  const MollifiedDrift& drift_;
  SpectralGrid grid_;
  double lambda_;
  std::vector<double> times_;
  std::vector<double> profile_fine_;
  std::vector<EtdWeights> weights_;
};

std::vector<Spectrum> derivatives(const MildMap& map, const std::vector<Spectrum>& u) {
  std::vector<Spectrum> ux;
  ux.reserve(u.size());
  for (const auto& s : u) ux.push_back(map.derivative(s));
  return ux;
}

std::vector<double> make_table(const GridFunction& f) {
  std::vector<double> table = f.oversampled(MildSolution::kOversample);
  table.push_back(table.front());
  return table;
}

}  // namespace

MildSolution::Cell MildSolution::locate(double x) const {
  const std::size_t cells = u_table_.front().size() - 1;
  const double s = (x + grid().half_length()) / table_step_;
  double cell = std::floor(s);
  const double w = s - cell;
  if (cell < 0.0 || cell >= static_cast<double>(cells)) {
    cell = std::fmod(cell, static_cast<double>(cells));
    if (cell < 0.0) cell += static_cast<double>(cells);
  }
  return {static_cast<std::size_t>(cell), w};
}

MildSolution::TimeWeight MildSolution::locate_time(double t) const {
  const std::size_t intervals = times_.size() - 1;
  const double h = times_.back() / static_cast<double>(intervals);
  const double s = std::clamp(t / h, 0.0, static_cast<double>(intervals));
  auto node = static_cast<std::size_t>(std::floor(s));
  if (node >= intervals) node = intervals - 1;
  return {node, s - static_cast<double>(node)};
}

double MildSolution::interpolate(const std::vector<std::vector<double>>& tables, double t,
                                 double x) const {
  const auto [node, tw] = locate_time(t);
  const auto [cell, xw] = locate(x);
  const auto& a = tables[node];
  const auto& b = tables[node + 1];
  const double va = a[cell] + xw * (a[cell + 1] - a[cell]);
  const double vb = b[cell] + xw * (b[cell + 1] - b[cell]);
  return va + tw * (vb - va);
}

double MildSolution::u_at(double t, double x) const { return interpolate(u_table_, t, x); }
double MildSolution::ux_at(double t, double x) const { return interpolate(ux_table_, t, x); }

MildSolution solve_mild(const MollifiedDrift& drift, double lambda, const PdeOptions& options) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be positive");
  require(options.T > 0.0, "PDE horizon must be positive");
  require(options.time_nodes >= 8, "PDE needs at least 8 time intervals");
  require(options.tol > 0.0, "PDE tolerance must be positive");

  const SpectralGrid& grid = drift.grid();
  const MildMap map(drift, lambda, options.T, options.time_nodes);
  const std::size_t nodes = map.times().size();

  std::vector<Spectrum> u(nodes, Spectrum(grid.num_modes()));
  std::vector<Spectrum> ux = derivatives(map, u);
  MildSolution solution;
  bool converged = false;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    std::vector<Spectrum> next = map.apply(ux);
    std::vector<Spectrum> next_ux = derivatives(map, next);
    const double dist = map.sup_distance(next, u);
    const double grad_dist = map.sup_distance(next_ux, ux);
    solution.history_.push_back({it, dist, grad_dist});
    u = std::move(next);
    ux = std::move(next_ux);
    if (!std::isfinite(dist) || dist > 1e12) break;
    if (dist < options.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergenceError("Picard iteration did not converge for lambda = " +
                              std::to_string(lambda));
  }

  solution.lambda_ = lambda;
  solution.times_ = map.times();
  solution.picard_residual_ = map.sup_distance(map.apply(ux), u);
  solution.table_step_ = grid.period() /
                         static_cast<double>(grid.size() * MildSolution::kOversample);
  for (std::size_t i = 0; i < nodes; ++i) {
    GridFunction ui = GridFunction::from_coefficients(grid, u[i]);
    GridFunction uxi = GridFunction::from_coefficients(grid, ux[i]);
    solution.u_table_.push_back(make_table(ui));
    solution.ux_table_.push_back(make_table(uxi));
    solution.u_.push_back(std::move(ui));
    solution.u_x_.push_back(std::move(uxi));
  }
  // Terminal condition holds exactly.
  std::fill(solution.u_table_.back().begin(), solution.u_table_.back().end(), 0.0);
  std::fill(solution.ux_table_.back().begin(), solution.ux_table_.back().end(), 0.0);

  for (std::size_t i = 0; i < nodes; ++i) {
    const auto& ut = solution.u_table_[i];
    for (double v : ut) solution.sup_u_ = std::max(solution.sup_u_, std::abs(v));
    for (double v : solution.ux_table_[i])
      solution.sup_ux_ = std::max(solution.sup_ux_, std::abs(v));
    for (std::size_t c = 0; c + 1 < ut.size(); ++c) {
      solution.sup_ux_ =
          std::max(solution.sup_ux_, std::abs(ut[c + 1] - ut[c]) / solution.table_step_);
    }
  }
  return solution;
}

MildSolution tune_lambda(const MollifiedDrift& drift, const PdeOptions& options) {
  std::vector<LambdaTrial> trace;
  for (double lambda = 1.0; lambda <= kMaxLambda; lambda *= 2.0) {
    try {
      MildSolution solution = solve_mild(drift, lambda, options);
      trace.push_back({lambda, true, solution.sup_ux()});
      if (solution.sup_ux() < kLambdaMargin) {
        solution.lambda_trace_ = std::move(trace);
        return solution;
      }
    } catch (const NonConvergenceError&) {
      trace.push_back({lambda, false, std::numeric_limits<double>::quiet_NaN()});
    }
  }
  throw NonConvergenceError("lambda search exceeded 2^20 without ||u_x|| < 0.45");
}

double mild_defect(const MildSolution& solution, const MollifiedDrift& drift) {
  const std::size_t intervals = solution.times().size() - 1;
  const MildMap map(drift, solution.lambda(), solution.horizon(), intervals);
  std::vector<Spectrum> u, ux;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const auto c = solution.u(i).coefficients();
    u.emplace_back(c.begin(), c.end());
    ux.push_back(map.derivative(u.back()));
  }
  return map.sup_distance(map.apply(ux), u);
}

void write_picard_history_csv(std::ostream& out, const MildSolution& solution) {
  // residual column: sup-norm change of u_x between consecutive iterates.
  out << "iteration,sup_distance,residual\n";
  const auto old = out.precision(17);
  for (const auto& step : solution.history()) {
    out << step.iteration << ',' << step.sup_distance << ',' << step.residual << '\n';
  }
  out.precision(old);
}

ZvonkinPair::ZvonkinPair(std::shared_ptr<const MildSolution> mild) : mild_(std::move(mild)) {
  require(mild_ != nullptr, "Zvonkin pair needs a mild solution");
  require(mild_->sup_ux() < 0.5, "Zvonkin transform needs ||u_x|| < 1/2");
}

double ZvonkinPair::psi(double t, double y) const {
  const double step = mild_->table_step();
  double lo = y - mild_->sup_u() - step;
  double hi = y + mild_->sup_u() + step;
  while (hi - lo > step) {
    const double mid = 0.5 * (lo + hi);
    (phi(t, mid) < y ? lo : hi) = mid;
  }
  // At most one knot left inside (lo, hi); move the bracket onto one cell.
  const double L = mild_->grid().half_length();
  const double knot = -L + (std::floor((lo + L) / step) + 1.0) * step;
  if (knot > lo && knot < hi) (phi(t, knot) <= y ? lo : hi) = knot;

  double flo = phi(t, lo) - y;
  double fhi = phi(t, hi) - y;
  double x = lo;
  for (int it = 0; it < 8; ++it) {
    if (fhi == flo) break;
    x = lo - flo * (hi - lo) / (fhi - flo);
    const double fx = phi(t, x) - y;
    if (std::abs(fx) < kInverseTolerance) break;
    if (fx < 0.0) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  return x;
}

}  // namespace sdelab
