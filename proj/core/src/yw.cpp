#include "sdelab/yw.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <ostream>

#include "sdelab/errors.hpp"

namespace sdelab {

YWPair::YWPair(const YWParams& params) : params_(params) {
  require(params.delta > 1.0 && std::isfinite(params.delta), "Yamada-Watanabe delta must exceed 1");
  require(params.kappa > 0.0 && params.kappa < 1.0, "Yamada-Watanabe kappa must lie in (0,1)");
  require(params.table_points >= 2, "Yamada-Watanabe table needs >= 2 points");
  lower_ = params.kappa / params.delta;
  const double mass = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [](double z) { return 1.0 / z; }, lower_, params.kappa, 15, 1e-15);
  normalizer_ = 1.0 / mass;

  const double lo = std::log(lower_ * 1e-2);
  const double hi = std::log(2.0 * params.kappa);
  for (std::size_t i = 0; i < params.table_points; ++i) {
    const double x = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                       static_cast<double>(params.table_points - 1));
    table_.push_back({x, phi(x), phi_prime(x), phi_second(x)});
  }
}

double YWPair::psi(double z) const {
  if (z < lower_ || z > params_.kappa) return 0.0;
  return normalizer_ / z;
}

double YWPair::phi_prime(double x) const {
  const double y = std::abs(x);
  double inner;
  if (y <= lower_) {
    inner = 0.0;
  } else if (y >= params_.kappa) {
    inner = 1.0;
  } else {
    inner = std::min(1.0, normalizer_ * std::log(y / lower_));
  }
  return x < 0.0 ? -inner : inner;
}

double YWPair::phi(double x) const {
  const double y = std::abs(x);
  // int_{lower}^{y} c log(z / lower) dz = c (y log(y/lower) - y + lower)
  const auto ramp = [&](double v) {
    return normalizer_ * (v * std::log(v / lower_) - v + lower_);
  };
  if (y <= lower_) return 0.0;
  if (y <= params_.kappa) return ramp(y);
  return ramp(params_.kappa) + (y - params_.kappa);
}

double YWPair::phi_second(double x) const { return psi(std::abs(x)); }

YWPair build_yw(const YWParams& params) { return YWPair(params); }

YWPropertyReport check_phi_properties(const YWPair& pair, std::span<const double> grid) {
  const double kappa = pair.params().kappa;
  const double lower = kappa / pair.params().delta;
  const double log_delta = std::log(pair.params().delta);
  YWPropertyReport r;
  r.points = grid.size();
  r.min_slack_a = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    const double ax = std::abs(x);
    const double slack = kappa + pair.phi(x) - ax;
    r.min_slack_a = std::min(r.min_slack_a, slack);
    r.max_defect_a = std::max(r.max_defect_a, -slack);
    r.max_defect_b = std::max(r.max_defect_b, std::abs(pair.phi_prime(x)) - 1.0);
    if (x != 0.0) {
      const bool inside = ax >= lower && ax <= kappa;
      const double bound = inside ? 2.0 / (ax * log_delta) : 0.0;
      const double second = pair.phi_second(x);
      r.max_defect_c = std::max({r.max_defect_c, second - bound, -second});
      if (inside) r.max_psi_ratio = std::max(r.max_psi_ratio, second / bound);
    }
  }
  r.passed = r.max_defect_a < kYWTolerance && r.max_defect_b < kYWTolerance &&
             r.max_defect_c < kYWTolerance;
  return r;
}

std::vector<double> yw_check_grid(const YWPair& pair, std::size_t points) {
  require(points >= 2, "grid needs >= 2 points");
  const double k = pair.params().kappa;
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = -2.0 * k + 4.0 * k * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

void write_yw_csv(std::ostream& out, const YWPair& pair, std::span<const double> grid) {
  out << "x,phi,phi_prime,phi_second\n";
  const auto old = out.precision(17);
  for (double x : grid) {
    out << x << ',' << pair.phi(x) << ',' << pair.phi_prime(x) << ',' << pair.phi_second(x)
        << '\n';
  }
  out.precision(old);
}

}  // namespace sdelab
