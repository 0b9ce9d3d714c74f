#include "sdelab/ensemble.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "sdelab/errors.hpp"
#include "sdelab/parallel.hpp"
#include "sdelab/scheme.hpp"

namespace sdelab {
namespace {

constexpr std::size_t kChunk = 32;

}  // namespace

std::vector<ErrorStats> run_ensemble(const MollifiedDrift& reference,
                                     std::span<const EnsembleLevel> levels,
                                     const EnsembleOptions& options) {
  require(options.paths >= 2, "ensemble needs at least two paths");
  require(options.p >= 1.0, "error exponent p must be >= 1");
  for (const auto& level : levels) {
    require(level.drift != nullptr, "ensemble level without drift");
    require(level.n >= 1 && options.n_fine % level.n == 0,
            "every n must divide n_fine");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t paths = options.paths;
  const std::size_t chunks = (paths + kChunk - 1) / kChunk;
  const std::size_t nl = levels.size();

  std::vector<std::vector<double>> sup_abs(nl, std::vector<double>(paths));
  std::vector<std::vector<double>> sup_pow(nl, std::vector<double>(paths));
  // pointwise[c][l] = sum over the chunk's paths of |diff| at each node
  std::vector<std::vector<std::vector<double>>> pointwise(chunks);

  parallel_for(chunks, options.workers, [&](std::size_t c) {
    auto& sums = pointwise[c];
    sums.resize(nl);
    for (std::size_t l = 0; l < nl; ++l) sums[l].assign(levels[l].n + 1, 0.0);
    const std::size_t end = std::min(paths, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const BrownianPath w = generate_path(options.master_seed, i, options.T, options.n_fine);
      const SchemePath ref = reference_solution(reference, w, options.x0);
      for (std::size_t l = 0; l < nl; ++l) {
        const SchemePath approx = euler_maruyama(*levels[l].drift, w, levels[l].n, options.x0);
        const PathError e = measure_error(ref, approx, options.p);
        sup_abs[l][i] = e.sup_abs;
        sup_pow[l][i] = e.sup_pow;
        for (std::size_t k = 0; k < e.pointwise.size(); ++k) sums[l][k] += e.pointwise[k];
      }
    }
  });

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto count = static_cast<double>(paths);
  std::vector<ErrorStats> out;
  for (std::size_t l = 0; l < nl; ++l) {
    ErrorStats s;
    s.n = levels[l].n;
    s.m = levels[l].drift->m();
    s.num_paths = paths;
    s.p = options.p;
    double mean = 0.0, mean_pow = 0.0;
    for (std::size_t i = 0; i < paths; ++i) {
      mean += sup_abs[l][i];
      mean_pow += sup_pow[l][i];
    }
    mean /= count;
    mean_pow /= count;
    double var = 0.0;
    for (std::size_t i = 0; i < paths; ++i) {
      const double d = sup_abs[l][i] - mean;
      var += d * d;
    }
    var /= count - 1.0;
    s.l1_sup = mean;
    s.lp_sup = std::pow(mean_pow, 1.0 / options.p);
    s.std_error = std::sqrt(var / count);

    std::vector<double> total(levels[l].n + 1, 0.0);
    for (std::size_t c = 0; c < chunks; ++c) {
      for (std::size_t k = 0; k < total.size(); ++k) total[k] += pointwise[c][l][k];
    }
    for (double v : total) s.sup_pointwise_l1 = std::max(s.sup_pointwise_l1, v / count);
    s.wall_time_s = elapsed;
    out.push_back(s);
  }
  return out;
}

void write_ensemble_csv(std::ostream& out, std::span<const ErrorStats> stats,
                        bool include_timing) {
  out << "n,m,num_paths,l1_sup,lp_sup,p,sup_pointwise_l1,std_error,wall_time_s\n";
  const auto old = out.precision(17);
  for (const auto& s : stats) {
    out << s.n << ',' << s.m << ',' << s.num_paths << ',' << s.l1_sup << ',' << s.lp_sup
        << ',' << s.p << ',' << s.sup_pointwise_l1 << ',' << s.std_error << ','
        << (include_timing ? s.wall_time_s : 0.0) << '\n';
  }
  out.precision(old);
}

}  // namespace sdelab
