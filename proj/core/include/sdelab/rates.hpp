#pragma once

#include <cstddef>

namespace sdelab {

// r(beta, eps) = (1/2 - beta - eps)^2 / (1 + beta + eps + 2 (1/2 - beta - eps)^2)
// for beta in (0, 1/2), eps in (0, 1/2 - beta).
double rate_r(double beta, double epsilon);

// eta = 1 / (2 [ (eps + beta_hat + 1)/2 + (1/2 - beta_hat - eps)^2 ])
// for beta_hat in (0, 1/2), eps > 0, beta_hat + eps < 1.
double eta_opt(double beta_hat, double epsilon);

// Difference of the two error exponents that the choice m = n^eta balances:
//   -eta (beta_hat - beta)/2 (2 alpha - 1)^2 - (eta (eps + beta_hat + 1)/2 - 1/2)(2 alpha - 1)
// with alpha = 1 - beta_hat - eps.
double balance_residual(double beta, double beta_hat, double epsilon, double eta);

// The beta for which eta_opt(beta_hat, eps) zeroes balance_residual:
// beta_hat - beta = 1/2 - beta_hat - eps.
double balanced_beta(double beta_hat, double epsilon);

struct RateParams {
  double beta = 0.1;
  double beta_hat = 0.15;
  double epsilon = 0.05;
  double p = 2.0;

  double alpha() const { return 1.0 - beta_hat - epsilon; }
  // beta < beta_hat < 1/2, 0 < eps < 1/2 - beta, alpha in (1/2, 1 - beta_hat),
  // p = 1 or p >= 2. Throws ValidationError.
  void validate() const;
};

struct TheoreticalRates {
  double lp_rate;  // r / p
  double l1_rate;  // r (1/2 - beta - eps)
};
TheoreticalRates theoretical_rates(const RateParams& params);

// m(n) = max(1, round(n^eta)).
std::size_t mollification_for(std::size_t n, double eta);

}  // namespace sdelab
