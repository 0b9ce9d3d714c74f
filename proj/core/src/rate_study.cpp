#include "sdelab/rate_study.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>

#include "sdelab/errors.hpp"

namespace sdelab {

LogLogFit fit_rate(const std::vector<RateRow>& rows, std::size_t& dropped) {
  dropped = 0;
  std::size_t used = rows.size();
  if (used > 2 && rows.back().std_error > kNoiseDropRatio * rows.back().l1_sup) {
    --used;
    dropped = 1;
  }
  std::vector<double> n, err;
  for (std::size_t i = 0; i < used; ++i) {
    n.push_back(static_cast<double>(rows[i].n));
    err.push_back(rows[i].l1_sup);
  }
  return fit_loglog(n, err);
}

bool errors_monotone(const std::vector<RateRow>& rows, double slack) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].l1_sup > (1.0 + slack) * rows[i - 1].l1_sup) return false;
  }
  return true;
}

bool one_sided_rate_check(const RateReport& report) {
  return !report.degenerate && report.fit.slope <= -report.theory_l1_rate + kOneSidedMargin;
}

RateReport run_rate_study(const RateStudyConfig& config) {
  config.rate.validate();
  require(config.n_list.size() >= 2, "rate study needs at least two step counts");
  for (std::size_t i = 1; i < config.n_list.size(); ++i) {
    require(config.n_list[i] > config.n_list[i - 1], "n_list must be strictly increasing");
  }
  const std::size_t n_max = config.n_list.back();
  require(config.ensemble.n_fine >= 8 * n_max,
          "reference resolution insufficient: n_fine < 8 * max n");

  RateReport report;
  report.rate_r = rate_r(config.rate.beta, config.rate.epsilon);
  report.eta = eta_opt(config.rate.beta_hat, config.rate.epsilon);
  const auto rates = theoretical_rates(config.rate);
  report.theory_l1_rate = rates.l1_rate;
  report.theory_lp_rate = rates.lp_rate;

  std::vector<std::size_t> ms;
  for (std::size_t n : config.n_list) {
    ms.push_back(config.m_fixed > 0 ? config.m_fixed : mollification_for(n, report.eta));
  }
  const std::size_t m_max = *std::max_element(ms.begin(), ms.end());
  report.m_ref = config.m_ref > 0 ? config.m_ref : 4 * m_max;
  require(report.m_ref >= 4 * m_max, "reference mollification m_ref < 4 * max m");

  const SpectralGrid grid(config.grid_half_length, config.grid_points);
  const GridFunction raw = build_drift(config.drift, grid);
  const auto modulation = config.drift.time_modulation;
  const MollifiedDrift reference(raw, report.m_ref, modulation, config.drift);

  std::vector<std::unique_ptr<MollifiedDrift>> drifts;
  std::vector<EnsembleLevel> levels;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    drifts.push_back(std::make_unique<MollifiedDrift>(raw, ms[i], modulation, config.drift));
    levels.push_back({config.n_list[i], drifts.back().get()});
  }
  report.stats = run_ensemble(reference, levels, config.ensemble);

  for (const auto& s : report.stats) {
    const double n = static_cast<double>(s.n);
    report.rows.push_back({s.n, s.m, s.l1_sup, s.lp_sup, s.std_error,
                           std::pow(n, -report.theory_l1_rate),
                           std::pow(n, -report.theory_lp_rate)});
  }
  report.degenerate = std::all_of(report.rows.begin(), report.rows.end(), [](const RateRow& r) {
    return r.l1_sup < kDegenerateError;
  });
  if (!report.degenerate) report.fit = fit_rate(report.rows, report.dropped_points);
  report.monotone = errors_monotone(report.rows);
  return report;
}

void write_rate_report_csv(std::ostream& out, const RateReport& report) {
  out << "n,m,l1_sup,lp_sup,std_error,theory_l1,theory_lp\n";
  const auto old = out.precision(17);
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.m << ',' << r.l1_sup << ',' << r.lp_sup << ',' << r.std_error << ','
        << r.theory_l1 << ',' << r.theory_lp << '\n';
  }
  out.precision(old);
}

void write_rate_summary_csv(std::ostream& out, const RateReport& report) {
  out << "fitted_slope,fit_r2,eta,rate_r,theory_l1_rate,theory_lp_rate,m_ref,"
         "points_used,degenerate,monotone\n";
  const auto old = out.precision(17);
  if (report.degenerate) {
    out << "nan,nan,";
  } else {
    out << report.fit.slope << ',' << report.fit.r2 << ',';
  }
  out << report.eta << ',' << report.rate_r << ',' << report.theory_l1_rate << ','
      << report.theory_lp_rate << ',' << report.m_ref << ',' << report.fit.points << ','
      << (report.degenerate ? 1 : 0) << ',' << (report.monotone ? 1 : 0) << '\n';
  out.precision(old);
}

}  // namespace sdelab
