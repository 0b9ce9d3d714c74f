#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sdelab/errors.hpp"
#include "sdelab/version.hpp"

using namespace sdelab;
using namespace sdelab::cli;

namespace {

// Subcommand flags are kept as raw strings and routed through
// ExperimentConfig::set so they get the same validation as config files.
struct Overrides {
  std::vector<std::pair<std::string, std::string>> pairs;

  void bind(CLI::App* app, const std::string& flag, const std::string& key,
            const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { pairs.emplace_back(key, v); }, help);
  }
};

void add_drift_options(CLI::App* sub, Overrides& ov) {
  sub->add_option_function<std::string>(
      "--drift",
      [&ov](const std::string& v) {
        if (v == "zero") {
          ov.pairs.emplace_back("drift.kind", "constant");
          ov.pairs.emplace_back("drift.amplitude", "0");
        } else {
          ov.pairs.emplace_back("drift.kind", v);
        }
      },
      "ou | holder | distributional | constant | sine | zero");
  ov.bind(sub, "--m", "drift.m", "mollification parameter");
  ov.bind(sub, "--amplitude", "drift.amplitude", "drift amplitude");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdelab: Euler-Maruyama experiments for SDEs with distributional drift"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir = "sdelab_out";
  std::optional<std::string> seed;
  unsigned workers = 0;
  bool timing = false;
  std::vector<std::string> sets;
  app.add_option("--config", config_path, "flat key = value configuration file");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "master seed (scheme.master_seed)");
  app.add_option("--workers", workers, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--set", sets, "override a config key, key=value (repeatable)");
  app.add_flag("--timing", timing, "write wall-clock times into ensemble CSVs");

  Overrides ov;

  auto* besov = app.add_subcommand("besov", "block norms, Bernstein and Schauder checks");
  ov.bind(besov, "--func", "besov.func", "sin | lacunary | zero | drift");
  ov.bind(besov, "--gamma", "besov.gamma", "Besov exponent in [-2, 3]");
  ov.bind(besov, "--theta", "besov.theta", "Schauder exponent in [0, 1)");
  besov->add_option_function<std::string>(
      "--drift-beta",
      [&](const std::string& v) {
        ov.pairs.emplace_back("besov.func", "drift");
        ov.pairs.emplace_back("drift.kind", "distributional_derivative");
        ov.pairs.emplace_back("drift.beta", v);
      },
      "analyse the distributional drift with this beta");

  auto* yw = app.add_subcommand("yw", "Yamada-Watanabe construction and property report");
  ov.bind(yw, "--delta", "yw.delta", "delta > 1");
  ov.bind(yw, "--kappa", "yw.kappa", "kappa in (0, 1)");
  ov.bind(yw, "--points", "yw.points", "check grid size (>= 10000)");
  yw->add_option_function<std::vector<std::string>>(
        "--yw-check",
        [&](const std::vector<std::string>& v) {
          ov.pairs.emplace_back("yw.delta", v.at(0));
          ov.pairs.emplace_back("yw.kappa", v.at(1));
        },
        "delta kappa")
      ->expected(2);

  auto* pde = app.add_subcommand("pde", "solve the Kolmogorov mild equation and tune lambda");
  add_drift_options(pde, ov);
  ov.bind(pde, "--lambda", "pde.lambda", "lambda or auto");

  auto* simulate = app.add_subcommand("simulate", "one coupled Euler-Maruyama ensemble");
  add_drift_options(simulate, ov);
  ov.bind(simulate, "--paths", "scheme.paths", "Monte Carlo paths");
  simulate->add_option_function<std::vector<std::string>>(
      "--n",
      [&](const std::vector<std::string>& v) { ov.pairs.emplace_back("scheme.n_list", join(v)); },
      "step counts");

  app.add_subcommand("rate-study", "rate sweep over n with m(n) = n^eta");

  std::string manifest;
  auto* replay = app.add_subcommand("replay", "re-run a previous run from its run.manifest");
  replay->add_option("manifest", manifest, "path to run.manifest")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    RunContext ctx;
    ctx.out_dir = out_dir;
    ctx.workers = workers;
    ctx.timing = timing;
    std::string command = app.get_subcommands().front()->get_name();
    if (command == "replay") {
      ctx.config = ExperimentConfig::from_file(manifest);
      command = ctx.config.get("run.command");
    } else if (!config_path.empty()) {
      ctx.config = ExperimentConfig::from_file(config_path);
    }
    for (const auto& [key, value] : ov.pairs) ctx.config.set(key, value);
    if (seed) ctx.config.set("scheme.master_seed", *seed);
    for (const auto& s : sets) ctx.config.set_assignment(s);
    return run_command(command, ctx);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
