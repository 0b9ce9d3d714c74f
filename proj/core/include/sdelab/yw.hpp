#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace sdelab {

struct YWParams {
  double delta = 2.0;  // > 1
  double kappa = 0.1;  // in (0, 1)
  std::size_t table_points = 512;
};

// Smooth approximation of |x|: psi(z) = c / z on [kappa/delta, kappa] with
// c normalising the mass to one, and
//   phi(x) = int_0^{|x|} int_0^y psi(z) dz dy.
// With this psi the inner integral is log(delta y / kappa) / log(delta) on
// the support, so phi, phi' and phi'' have closed forms.
class YWPair {
 public:
  explicit YWPair(const YWParams& params);

  const YWParams& params() const { return params_; }
  // 1 / int_{kappa/delta}^{kappa} dz/z, evaluated by adaptive quadrature.
  double normalizer() const { return normalizer_; }

  double psi(double z) const;
  double phi(double x) const;
  double phi_prime(double x) const;
  double phi_second(double x) const;  // = psi(|x|)

  // Log-spaced tabulation over (0, 2 kappa]: x, phi, phi', phi''.
  struct Row {
    double x, phi, phi_prime, phi_second;
  };
  std::span<const Row> table() const { return table_; }

 private:
  YWParams params_;
  double normalizer_;
  double lower_;  // kappa / delta
  std::vector<Row> table_;
};

YWPair build_yw(const YWParams& params);

struct YWPropertyReport {
  double max_defect_a = 0.0;  // max(|x| - kappa - phi(x), 0)
  double max_defect_b = 0.0;  // max(|phi'| - 1, 0)
  double max_defect_c = 0.0;  // max(phi'' - 2/(|x| log delta) 1_[kappa/delta,kappa], 0)
  double min_slack_a = 0.0;   // min over grid of kappa + phi(x) - |x|
  double max_psi_ratio = 0.0; // max psi(|x|) / (2/(|x| log delta)) on the support
  std::size_t points = 0;
  bool passed = false;
};

inline constexpr double kYWTolerance = 1e-8;

// Checks the three defining properties pointwise on `grid`.
YWPropertyReport check_phi_properties(const YWPair& pair, std::span<const double> grid);

// Uniform grid of `points` points on [-2 kappa, 2 kappa].
std::vector<double> yw_check_grid(const YWPair& pair, std::size_t points = 10001);

void write_yw_csv(std::ostream& out, const YWPair& pair, std::span<const double> grid);

}  // namespace sdelab
