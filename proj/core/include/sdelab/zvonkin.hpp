#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "sdelab/drift.hpp"
#include "sdelab/grid_function.hpp"

namespace sdelab {

struct PdeOptions {
  double T = 1.0;
  std::size_t time_nodes = 64;  // number of time intervals M
  double tol = 1e-8;
  std::size_t max_iterations = 200;
};

struct PicardStep {
  std::size_t iteration;
  double sup_distance;
  double residual;
};

struct LambdaTrial {
  double lambda;
  bool converged;
  double sup_ux;  // NaN when the solve did not converge
};

// Mild solution u of  u_t + 1/2 u_xx + b u_x = lambda u - b,  u(T) = 0,
// on a uniform time grid, with interpolation tables for pointwise use.
class MildSolution {
 public:
  static constexpr std::size_t kOversample = 8;

  double lambda() const { return lambda_; }
  double horizon() const { return times_.back(); }
  std::span<const double> times() const { return times_; }
  const SpectralGrid& grid() const { return u_.front().grid(); }

  const GridFunction& u(std::size_t node) const { return u_.at(node); }
  const GridFunction& u_x(std::size_t node) const { return u_x_.at(node); }

  // ||u_x||_{inf,L^inf}, taken over the interpolation table (including the
  // slopes of the piecewise-linear interpolant) so that it bounds every
  // difference quotient of phi.
  double sup_ux() const { return sup_ux_; }
  double sup_u() const { return sup_u_; }
  double picard_residual() const { return picard_residual_; }
  std::size_t iterations() const { return history_.size(); }
  std::span<const PicardStep> history() const { return history_; }
  std::span<const LambdaTrial> lambda_trace() const { return lambda_trace_; }

  // Piecewise-linear in t between nodes, linear on the oversampled x-table.
  double u_at(double t, double x) const;
  double ux_at(double t, double x) const;

  // Locates x on the table: cell index and weight in [0,1).
  struct Cell {
    std::size_t index;
    double weight;
  };
  Cell locate(double x) const;
  double table_step() const { return table_step_; }

 private:
  friend MildSolution solve_mild(const MollifiedDrift&, double, const PdeOptions&);
  friend MildSolution tune_lambda(const MollifiedDrift&, const PdeOptions&);

  struct TimeWeight {
    std::size_t node;
    double weight;
  };
  TimeWeight locate_time(double t) const;
  double interpolate(const std::vector<std::vector<double>>& tables, double t, double x) const;

  double lambda_ = 0.0;
  std::vector<double> times_;
  std::vector<GridFunction> u_;
  std::vector<GridFunction> u_x_;
  std::vector<std::vector<double>> u_table_;
  std::vector<std::vector<double>> ux_table_;
  double table_step_ = 0.0;
  double sup_ux_ = 0.0;
  double sup_u_ = 0.0;
  double picard_residual_ = 0.0;
  std::vector<PicardStep> history_;
  std::vector<LambdaTrial> lambda_trace_;
};

// Picard iteration of the mild equation.
// Throws NonConvergenceError if the iterates do not settle within
// max_iterations.
MildSolution solve_mild(const MollifiedDrift& drift, double lambda, const PdeOptions& options);

inline constexpr double kLambdaMargin = 0.45;
inline constexpr double kMaxLambda = 1048576.0;  // 2^20

// lambda = 1, 2, 4, ... until sup_ux < 0.45.
MildSolution tune_lambda(const MollifiedDrift& drift, const PdeOptions& options);

// sup over nodes of |Phi(u) - u| where Phi is the discretised mild map.
double mild_defect(const MildSolution& solution, const MollifiedDrift& drift);

void write_picard_history_csv(std::ostream& out, const MildSolution& solution);

// phi(t, x) = x + u(t, x) and its inverse in x.
class ZvonkinPair {
 public:
  explicit ZvonkinPair(std::shared_ptr<const MildSolution> mild);

  const MildSolution& mild() const { return *mild_; }
  double lip_lower() const { return 1.0 - mild_->sup_ux(); }
  double lip_upper() const { return 1.0 + mild_->sup_ux(); }

  double phi(double t, double x) const { return x + mild_->u_at(t, x); }
  // Solves phi(t, x) = y: bisection down to one table cell, then a secant
  // step, which is exact because phi(t, .) is linear on each cell.
  double psi(double t, double y) const;

  static constexpr double kInverseTolerance = 1e-11;

 private:
  std::shared_ptr<const MildSolution> mild_;
};

}  // namespace sdelab
