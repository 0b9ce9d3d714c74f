#include "sdelab/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "sdelab/errors.hpp"

namespace sdelab {

SchemePath euler_maruyama(const MollifiedDrift& drift, const BrownianPath& w, std::size_t n,
                          double x0) {
  const auto dw = coarsen(w, n);
  SchemePath path{n, drift.m(), w.T, std::vector<double>(n + 1), 0};
  const double h = w.T / static_cast<double>(n);
  // X_k = x0 + S_k with S accumulated from zero, so that for zero drift
  // S_k is bitwise the partial sum W_{t_k}.
  double s = 0.0;
  path.values[0] = x0;
  for (std::size_t k = 0; k < n; ++k) {
    s = s + drift.evaluate(path.time(k), x0 + s) * h + dw[k];
    path.values[k + 1] = x0 + s;
  }
  path.drift_eval_count = n;
  return path;
}

SchemePath reference_solution(const MollifiedDrift& drift, const BrownianPath& w, double x0) {
  return euler_maruyama(drift, w, w.n_fine, x0);
}

PathError measure_error(const SchemePath& ref, const SchemePath& approx, double p) {
  require(approx.n >= 1 && ref.n % approx.n == 0, "incompatible grids: n_ref % n != 0");
  require(ref.T == approx.T, "incompatible grids: horizons differ");
  require(ref.values.size() == ref.n + 1 && approx.values.size() == approx.n + 1,
          "malformed scheme path");
  const std::size_t stride = ref.n / approx.n;
  PathError e;
  e.pointwise.resize(approx.n + 1);
  for (std::size_t k = 0; k <= approx.n; ++k) {
    const double d = std::abs(ref.values[k * stride] - approx.values[k]);
    e.pointwise[k] = d;
    e.sup_abs = std::max(e.sup_abs, d);
  }
  e.sup_pow = std::pow(e.sup_abs, p);
  return e;
}

SchemePath simulate_transformed(const ZvonkinPair& zp, const MollifiedDrift& drift,
                                const BrownianPath& w, std::size_t n, double y0) {
  require(zp.mild().grid() == drift.grid(), "transform and drift live on different grids");
  const auto dw = coarsen(w, n);
  const MildSolution& mild = zp.mild();
  SchemePath path{n, drift.m(), w.T, std::vector<double>(n + 1), 0};
  const double h = w.T / static_cast<double>(n);
  double s = 0.0;
  path.values[0] = y0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = path.time(k);
    const double x = zp.psi(t, y0 + s);
    s = s + mild.lambda() * mild.u_at(t, x) * h + (1.0 + mild.ux_at(t, x)) * dw[k];
    path.values[k + 1] = y0 + s;
  }
  return path;
}

}  // namespace sdelab
