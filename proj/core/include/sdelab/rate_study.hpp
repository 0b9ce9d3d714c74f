#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sdelab/drift.hpp"
#include "sdelab/ensemble.hpp"
#include "sdelab/loglog_fit.hpp"
#include "sdelab/rates.hpp"

namespace sdelab {

struct RateStudyConfig {
  DriftSpec drift;
  double grid_half_length = 16.0;
  std::size_t grid_points = 16384;
  RateParams rate;  // rate.beta is taken from drift.beta by the CLI
  std::vector<std::size_t> n_list = {16, 32, 64, 128, 256, 512};
  std::size_t m_ref = 0;    // 0: 4 * max m(n)
  std::size_t m_fixed = 0;  // > 0: use this m for every n instead of n^eta
  EnsembleOptions ensemble;
};

struct RateRow {
  std::size_t n;
  std::size_t m;
  double l1_sup;
  double lp_sup;
  double std_error;
  double theory_l1;  // n^{-l1_rate}
  double theory_lp;  // n^{-lp_rate}
};

struct RateReport {
  double rate_r = 0.0;
  double eta = 0.0;
  double theory_l1_rate = 0.0;
  double theory_lp_rate = 0.0;
  std::size_t m_ref = 0;
  std::vector<RateRow> rows;
  std::vector<ErrorStats> stats;
  LogLogFit fit;           // log2 l1_sup against log2 n
  bool degenerate = false; // every error below 1e-12; fit left empty
  std::size_t dropped_points = 0;
  bool monotone = false;   // l1_sup[i+1] <= 1.1 l1_sup[i]
};

inline constexpr double kDegenerateError = 1e-12;
inline constexpr double kNoiseDropRatio = 0.25;
inline constexpr double kMonotoneSlack = 0.10;
inline constexpr double kOneSidedMargin = 0.02;

RateReport run_rate_study(const RateStudyConfig& config);

// Fit of log2(error) on log2(n); the largest-n point is dropped when its
// standard error exceeds 25% of its value.
LogLogFit fit_rate(const std::vector<RateRow>& rows, std::size_t& dropped);

bool errors_monotone(const std::vector<RateRow>& rows, double slack = kMonotoneSlack);

// Empirical L1-sup decay at least as fast as the theoretical bound:
// slope <= -l1_rate + 0.02.
bool one_sided_rate_check(const RateReport& report);

// Columns: n,m,l1_sup,lp_sup,std_error,theory_l1,theory_lp
void write_rate_report_csv(std::ostream& out, const RateReport& report);
// Single summary row: fitted_slope,fit_r2,eta,rate_r,...
void write_rate_summary_csv(std::ostream& out, const RateReport& report);

}  // namespace sdelab
