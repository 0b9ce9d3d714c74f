#include "sdelab/rates.hpp"

#include <algorithm>
#include <cmath>

#include "sdelab/errors.hpp"

namespace sdelab {

double rate_r(double beta, double epsilon) {
  require(beta > 0.0 && beta < 0.5, "rate_r: beta must lie in (0, 1/2)");
  require(epsilon > 0.0 && epsilon < 0.5 - beta, "rate_r: epsilon must lie in (0, 1/2 - beta)");
  const double q = 0.5 - beta - epsilon;
  return q * q / (1.0 + beta + epsilon + 2.0 * q * q);
}

double eta_opt(double beta_hat, double epsilon) {
  require(beta_hat > 0.0 && beta_hat < 0.5, "eta_opt: beta_hat must lie in (0, 1/2)");
  require(epsilon > 0.0 && beta_hat + epsilon < 1.0,
          "eta_opt: epsilon must be positive with beta_hat + epsilon < 1");
  const double q = 0.5 - beta_hat - epsilon;
  return 1.0 / (2.0 * ((epsilon + beta_hat + 1.0) / 2.0 + q * q));
}

double balance_residual(double beta, double beta_hat, double epsilon, double eta) {
  const double alpha = 1.0 - beta_hat - epsilon;
  const double g = 2.0 * alpha - 1.0;
  const double stability = -eta * (beta_hat - beta) / 2.0 * g * g;
  const double numerical = (eta * (epsilon + beta_hat + 1.0) / 2.0 - 0.5) * g;
  return stability - numerical;
}

double balanced_beta(double beta_hat, double epsilon) {
  return beta_hat - (0.5 - beta_hat - epsilon);
}

void RateParams::validate() const {
  require(beta > 0.0 && beta < 0.5, "beta must lie in (0, 1/2)");
  require(beta_hat > beta && beta_hat < 0.5, "beta_hat must lie in (beta, 1/2)");
  require(epsilon > 0.0 && epsilon < 0.5 - beta, "epsilon must lie in (0, 1/2 - beta)");
  require(alpha() > 0.5 && alpha() < 1.0 - beta_hat,
          "alpha = 1 - beta_hat - epsilon must lie in (1/2, 1 - beta_hat)");
  require(p == 1.0 || p >= 2.0, "p must be 1 or >= 2");
}

TheoreticalRates theoretical_rates(const RateParams& params) {
  params.validate();
  const double r = rate_r(params.beta, params.epsilon);
  return {r / params.p, r * (0.5 - params.beta - params.epsilon)};
}

std::size_t mollification_for(std::size_t n, double eta) {
  require(n >= 1, "n must be >= 1");
  require(eta > 0.0, "eta must be positive");
  const double m = std::round(std::pow(static_cast<double>(n), eta));
  return static_cast<std::size_t>(std::max(1.0, m));
}

}  // namespace sdelab
