#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sdelab/drift.hpp"

namespace sdelab {

struct EnsembleOptions {
  std::uint64_t master_seed = 0;
  std::size_t paths = 10000;
  double T = 1.0;
  std::size_t n_fine = 8192;
  double x0 = 0.0;
  double p = 2.0;
  unsigned workers = 0;  // 0 = all hardware threads
};

struct ErrorStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t num_paths = 0;
  double l1_sup = 0.0;            // E sup_k |X_ref - X^{m,n}|
  double lp_sup = 0.0;            // (E sup_k |.|^p)^{1/p}
  double p = 2.0;
  double sup_pointwise_l1 = 0.0;  // max_k E |.|
  double std_error = 0.0;         // of l1_sup
  double wall_time_s = 0.0;
};

struct EnsembleLevel {
  std::size_t n;
  const MollifiedDrift* drift;
};

// Simulates `paths` coupled paths: for each, a reference Euler path at n_fine
// under `reference` and one Euler path per level under the same Brownian
// increments. Paths are processed in fixed-size chunks reduced in chunk
// order, so statistics are bit-identical for any worker count.
std::vector<ErrorStats> run_ensemble(const MollifiedDrift& reference,
                                     std::span<const EnsembleLevel> levels,
                                     const EnsembleOptions& options);

// Columns: n,m,num_paths,l1_sup,lp_sup,p,sup_pointwise_l1,std_error,wall_time_s.
// Timing is written as 0 unless include_timing is set, since wall-clock
// values are not reproducible.
void write_ensemble_csv(std::ostream& out, std::span<const ErrorStats> stats,
                        bool include_timing = false);

}  // namespace sdelab
