#pragma once

#include <cstddef>
#include <vector>

#include "sdelab/brownian.hpp"
#include "sdelab/drift.hpp"
#include "sdelab/zvonkin.hpp"

namespace sdelab {

struct SchemePath {
  std::size_t n = 0;
  std::size_t m = 0;
  double T = 1.0;
  std::vector<double> values;  // n + 1 nodes
  std::size_t drift_eval_count = 0;

  double time(std::size_t k) const {
    return T * static_cast<double>(k) / static_cast<double>(n);
  }
};

// X_{k+1} = X_k + b^m(t_k, X_k) h + dW_k, h = T/n.
SchemePath euler_maruyama(const MollifiedDrift& drift, const BrownianPath& w, std::size_t n,
                          double x0);

// Euler path at n = n_fine, used as the coupling reference.
SchemePath reference_solution(const MollifiedDrift& drift, const BrownianPath& w, double x0);

struct PathError {
  double sup_abs = 0.0;             // max_k |ref - approx|
  double sup_pow = 0.0;             // max_k |ref - approx|^p
  std::vector<double> pointwise;    // |ref - approx| at the coarse nodes
};

// Compares at the coarse nodes t_k; ref.n must be a multiple of approx.n.
PathError measure_error(const SchemePath& ref, const SchemePath& approx, double p);

// Euler scheme for the transformed process
//   dY = lambda u(s, psi(s, Y)) ds + (1 + u_x(s, psi(s, Y))) dW.
SchemePath simulate_transformed(const ZvonkinPair& zp, const MollifiedDrift& drift,
                                const BrownianPath& w, std::size_t n, double y0);

}  // namespace sdelab
