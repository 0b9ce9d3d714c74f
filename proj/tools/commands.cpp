#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <memory>
#include <numbers>

#include "sdelab/besov.hpp"
#include "sdelab/csv.hpp"
#include "sdelab/drift.hpp"
#include "sdelab/ensemble.hpp"
#include "sdelab/errors.hpp"
#include "sdelab/rate_study.hpp"
#include "sdelab/yw.hpp"
#include "sdelab/zvonkin.hpp"

namespace sdelab::cli {
namespace {

constexpr double kBernsteinBound = 4.0;

GridFunction besov_function(const ExperimentConfig& config, const SpectralGrid& grid) {
  const std::string name = config.get("besov.func");
  if (name == "zero") return GridFunction::zero(grid);
  if (name == "drift") return build_drift(config.drift_spec(), grid);
  if (name == "sin") {
    const double xi = grid.frequency(grid.nearest_mode(config.get_double("drift.frequency")));
    return GridFunction::sample(grid, [xi](double x) { return std::sin(xi * x); });
  }
  // lacunary: exactly of regularity gamma + 2 theta
  const double reg = config.get_double("besov.gamma") + 2.0 * config.get_double("besov.theta");
  const auto modes = lacunary_modes(grid);
  return GridFunction::sample(grid, [&](double x) {
    double s = 0.0;
    for (const auto& m : modes) s += std::exp2(-m.block * reg) * std::sin(m.frequency * x);
    return s;
  });
}

bool is_holder_exponent(double g) { return (g > 0.0 && g < 1.0) || (g > 1.0 && g < 2.0); }

}  // namespace

int cmd_besov(const RunContext& ctx) {
  const auto& config = ctx.config;
  const SpectralGrid grid = config.grid();
  const double gamma = config.get_double("besov.gamma");
  const double theta = config.get_double("besov.theta");
  const GridFunction f = besov_function(config, grid);

  const auto table = besov_table(f, gamma);
  auto blocks = open_output(ctx.out_dir, "besov_blocks.csv");
  write_block_table_csv(blocks, table);

  const double norm = besov_norm(f, gamma);
  // The Bernstein pair needs gamma + 1 inside the supported range.
  const bool bernstein_ok = gamma + 1.0 <= kMaxBesovGamma;
  const auto bern = bernstein_ok ? check_bernstein(f, gamma) : BernsteinReport{0.0, 0.0, 0.0};
  const bool nonzero = f.sup_norm() > 0.0;
  const double holder =
      is_holder_exponent(gamma) ? holder_norm(f, gamma) : std::nan("");

  SchauderReport schauder{};
  const bool schauder_ok = nonzero && gamma + 2.0 * theta <= kMaxBesovGamma;
  if (schauder_ok) {
    std::vector<double> times;
    for (int k = 14; k >= 4; --k) times.push_back(std::ldexp(1.0, -k));
    schauder = check_schauder(f, gamma, theta, times);
  }

  auto summary = open_output(ctx.out_dir, "besov_summary.csv");
  summary.precision(17);
  summary << "func,gamma,theta,besov_norm,holder_norm,bernstein_ratio,smoothing_slope,"
             "approximation_slope\n";
  summary << config.get("besov.func") << ',' << config.get("besov.gamma") << ','
          << config.get("besov.theta") << ',' << norm << ','
          << holder << ',' << bern.ratio << ','
          << (schauder_ok ? schauder.smoothing_slope : std::nan("")) << ','
          << (schauder_ok ? schauder.approximation_slope : std::nan("")) << '\n';

  std::cout << "besov_norm(" << config.get("besov.func") << ", " << gamma << ") = " << norm
            << "\nbernstein ratio = " << bern.ratio << '\n';
  if (bern.ratio > kBernsteinBound) {
    std::cerr << "check failed: Bernstein ratio " << bern.ratio << " > " << kBernsteinBound
              << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_yw(const RunContext& ctx) {
  const YWParams params = ctx.config.yw_params();
  const YWPair pair = build_yw(params);
  const auto grid = yw_check_grid(pair, ctx.config.get_uint("yw.points"));
  const auto report = check_phi_properties(pair, grid);

  auto table = open_output(ctx.out_dir, "yw_table.csv");
  write_yw_csv(table, pair, grid);
  auto out = open_output(ctx.out_dir, "yw_report.csv");
  out.precision(17);
  out << "delta,kappa,normalizer,max_defect_a,max_defect_b,max_defect_c,min_slack_a,"
         "max_psi_ratio,points,passed\n";
  out << params.delta << ',' << params.kappa << ',' << pair.normalizer() << ','
      << report.max_defect_a << ',' << report.max_defect_b << ',' << report.max_defect_c << ','
      << report.min_slack_a << ',' << report.max_psi_ratio << ',' << report.points << ','
      << (report.passed ? 1 : 0) << '\n';

  std::cout << "yw delta=" << params.delta << " kappa=" << params.kappa
            << " defects A/B/C = " << report.max_defect_a << ' ' << report.max_defect_b << ' '
            << report.max_defect_c << (report.passed ? "  ok\n" : "  FAILED\n");
  return report.passed ? kOk : kCheckFailed;
}

int cmd_pde(const RunContext& ctx) {
  const auto& config = ctx.config;
  const SpectralGrid grid = config.grid();
  const MollifiedDrift bm = mollify(config.drift_spec(), config.drift_m(), grid);
  const PdeOptions opts = config.pde_options();
  const auto lambda = config.pde_lambda();
  const MildSolution sol = lambda ? solve_mild(bm, *lambda, opts) : tune_lambda(bm, opts);
  const double defect = mild_defect(sol, bm);

  auto history = open_output(ctx.out_dir, "picard_history.csv");
  write_picard_history_csv(history, sol);

  auto trace = open_output(ctx.out_dir, "lambda_trace.csv");
  trace.precision(17);
  trace << "lambda,converged,sup_ux\n";
  for (const auto& t : sol.lambda_trace()) {
    trace << t.lambda << ',' << (t.converged ? 1 : 0) << ',' << t.sup_ux << '\n';
  }

  auto u0 = open_output(ctx.out_dir, "u0.csv");
  u0.precision(17);
  u0 << "x,u,u_x\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    u0 << grid.x(i) << ',' << sol.u(0).values()[i] << ',' << sol.u_x(0).values()[i] << '\n';
  }

  auto summary = open_output(ctx.out_dir, "pde_summary.csv");
  summary.precision(17);
  summary << "lambda,sup_u,sup_ux,iterations,picard_residual,mild_defect\n";
  summary << sol.lambda() << ',' << sol.sup_u() << ',' << sol.sup_ux() << ','
          << sol.iterations() << ',' << sol.picard_residual() << ',' << defect << '\n';

  std::cout << "lambda = " << sol.lambda() << "  sup|u| = " << sol.sup_u()
            << "  sup|u_x| = " << sol.sup_ux() << "  iterations = " << sol.iterations()
            << "  defect = " << defect << '\n';
  if (defect > 10.0 * opts.tol) {
    std::cerr << "check failed: mild defect " << defect << " > 10 tol\n";
    return kCheckFailed;
  }
  if (sol.sup_ux() >= 0.5) {
    std::cerr << "check failed: sup|u_x| >= 1/2, phi is not invertible\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_simulate(const RunContext& ctx) {
  const auto& config = ctx.config;
  const SpectralGrid grid = config.grid();
  const DriftSpec spec = config.drift_spec();
  const std::size_t m = config.drift_m();
  const std::size_t m_ref = config.get("scheme.m_ref") == "auto" ? m : config.get_uint("scheme.m_ref");
  const GridFunction raw = build_drift(spec, grid);
  const MollifiedDrift drift(raw, m, spec.time_modulation, spec);
  const MollifiedDrift reference(raw, m_ref, spec.time_modulation, spec);

  std::vector<EnsembleLevel> levels;
  for (std::size_t n : config.get_size_list("scheme.n_list")) levels.push_back({n, &drift});
  EnsembleOptions opts = config.ensemble_options();
  opts.workers = ctx.workers;
  const auto stats = run_ensemble(reference, levels, opts);

  auto out = open_output(ctx.out_dir, "ensemble.csv");
  write_ensemble_csv(out, stats, ctx.timing);
  for (const auto& s : stats) {
    std::cout << "n = " << s.n << "  E sup|err| = " << s.l1_sup << " +- " << s.std_error << '\n';
    if (s.sup_pointwise_l1 > s.l1_sup) {
      std::cerr << "check failed: sup_t E|err| > E sup_t |err|\n";
      return kCheckFailed;
    }
  }
  return kOk;
}

int cmd_rate_study(const RunContext& ctx) {
  RateStudyConfig study = ctx.config.rate_study();
  study.ensemble.workers = ctx.workers;
  const RateReport report = run_rate_study(study);

  auto rows = open_output(ctx.out_dir, "rate_report.csv");
  write_rate_report_csv(rows, report);
  auto summary = open_output(ctx.out_dir, "rate_summary.csv");
  write_rate_summary_csv(summary, report);
  auto ensemble = open_output(ctx.out_dir, "ensemble.csv");
  write_ensemble_csv(ensemble, report.stats, ctx.timing);

  if (report.degenerate) {
    std::cout << "all errors below " << kDegenerateError << ": degenerate fit\n";
    return kOk;
  }
  const bool one_sided = one_sided_rate_check(report);
  std::cout << "fitted slope = " << report.fit.slope << " (r2 " << report.fit.r2
            << "), theory L1 rate = " << report.theory_l1_rate << ", eta = " << report.eta
            << '\n';
  if (!one_sided || !report.monotone) {
    std::cerr << "check failed:" << (one_sided ? "" : " slope above -l1_rate + 0.02")
              << (report.monotone ? "" : " errors not monotone") << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int run_command(const std::string& command, const RunContext& ctx) {
  ctx.config.validate();
  {
    auto manifest = open_output(ctx.out_dir, "run.manifest");
    ctx.config.write_manifest(manifest, command);
  }
  if (command == "besov") return cmd_besov(ctx);
  if (command == "yw") return cmd_yw(ctx);
  if (command == "pde") return cmd_pde(ctx);
  if (command == "simulate") return cmd_simulate(ctx);
  if (command == "rate-study") return cmd_rate_study(ctx);
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace sdelab::cli
