#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "sdelab/errors.hpp"
#include "sdelab/yw.hpp"

using namespace sdelab;

namespace {

// Composite Simpson in s = log z, where psi(z) dz = c ds exactly.
double psi_mass(const YWPair& pair) {
  const double a = std::log(pair.params().kappa / pair.params().delta) + 1e-15;
  const double b = std::log(pair.params().kappa) - 1e-15;
  const int n = 2000;
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double z = std::exp(a + h * i);
    const double f = pair.psi(z) * z;
    s += f * (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  return s * h / 3.0;
}

}  // namespace

class YWGrid : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(YWGrid, NormalisedMass) {
  const auto [delta, kappa] = GetParam();
  const auto pair = build_yw({delta, kappa, 512});
  EXPECT_NEAR(pair.normalizer(), 1.0 / std::log(delta), 1e-12 / std::log(delta));
  EXPECT_NEAR(psi_mass(pair), 1.0, 1e-10);
}

TEST_P(YWGrid, DefiningProperties) {
  const auto [delta, kappa] = GetParam();
  const auto pair = build_yw({delta, kappa, 512});
  const auto grid = yw_check_grid(pair, 10001);
  const auto report = check_phi_properties(pair, grid);
  EXPECT_TRUE(report.passed);
  EXPECT_LT(report.max_defect_a, 1e-8);
  EXPECT_LT(report.max_defect_b, 1e-8);
  EXPECT_LT(report.max_defect_c, 1e-8);
  EXPECT_EQ(report.points, 10001u);
  EXPECT_LE(report.max_psi_ratio, 0.5 + 1e-12);
}

TEST_P(YWGrid, ShapeInvariants) {
  const auto [delta, kappa] = GetParam();
  const auto pair = build_yw({delta, kappa, 512});
  const double lower = kappa / delta;
  for (double x : yw_check_grid(pair, 4001)) {
    const double ax = std::abs(x);
    EXPECT_EQ(pair.phi(x), pair.phi(-x));
    EXPECT_EQ(pair.phi_prime(x), -pair.phi_prime(-x));
    EXPECT_GE(pair.phi_second(x), 0.0);
    EXPECT_LE(pair.phi(x), ax + 1e-15);
    EXPECT_GE(pair.phi(x), ax - kappa - 1e-15);
    if (ax <= lower) EXPECT_EQ(pair.phi(x), 0.0);
    if (ax >= kappa) EXPECT_NEAR(pair.phi_prime(x), x > 0 ? 1.0 : -1.0, 1e-12);
  }
  EXPECT_GT(pair.phi(kappa), 0.0);
}

TEST_P(YWGrid, DerivativesConsistent) {
  const auto [delta, kappa] = GetParam();
  const auto pair = build_yw({delta, kappa, 512});
  const double lower = kappa / delta;
  for (int i = 1; i < 50; ++i) {
    const double x = lower + (2.0 * kappa - lower) * i / 50.0;
    const double h = 1e-6 * kappa;
    EXPECT_NEAR((pair.phi(x + h) - pair.phi(x - h)) / (2 * h), pair.phi_prime(x), 1e-6);
    if (std::abs(x - kappa) > 2 * h && x - lower > 2 * h) {
      EXPECT_NEAR((pair.phi_prime(x + h) - pair.phi_prime(x - h)) / (2 * h), pair.phi_second(x),
                  1e-5 * std::max(1.0, pair.phi_second(x)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    DeltaKappa, YWGrid,
    ::testing::Values(std::pair{std::numbers::e, 0.1}, std::pair{std::numbers::e, 0.01},
                      std::pair{std::numbers::e, 0.001}, std::pair{2.0, 0.1},
                      std::pair{2.0, 0.01}, std::pair{2.0, 0.001}, std::pair{10.0, 0.1},
                      std::pair{10.0, 0.01}, std::pair{10.0, 0.001}));

TEST(YW, ClosedFormSecondDerivative) {
  const auto pair = build_yw({std::numbers::e, 0.1, 512});
  EXPECT_NEAR(pair.phi_second(0.05), 20.0, 1e-9);
  EXPECT_NEAR(2.0 / (0.05 * std::log(std::numbers::e)), 40.0, 1e-12);
  EXPECT_NEAR(pair.phi_second(-0.05), 20.0, 1e-9);
  EXPECT_EQ(pair.phi(0.0), 0.0);
  EXPECT_EQ(pair.phi_second(0.2), 0.0);
}

TEST(YW, ApproachesAbsoluteValue) {
  for (double kappa : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto pair = build_yw({2.0, kappa, 64});
    double worst = 0.0;
    for (int i = -2000; i <= 2000; ++i) {
      const double x = 3.0 * kappa * i / 2000.0;
      worst = std::max(worst, std::abs(std::abs(x) - pair.phi(x)));
    }
    EXPECT_LE(worst, kappa);
  }
}

TEST(YW, InvalidParameters) {
  EXPECT_THROW(build_yw({1.0, 0.1, 64}), ValidationError);
  EXPECT_THROW(build_yw({0.5, 0.1, 64}), ValidationError);
  EXPECT_THROW(build_yw({2.0, 0.0, 64}), ValidationError);
  EXPECT_THROW(build_yw({2.0, 1.0, 64}), ValidationError);
}

TEST(YW, TableAndCsv) {
  const auto pair = build_yw({2.0, 0.1, 128});
  const auto table = pair.table();
  ASSERT_EQ(table.size(), 128u);
  for (std::size_t i = 1; i < table.size(); ++i) {
    EXPECT_GT(table[i].x, table[i - 1].x);
    EXPECT_GE(table[i].phi, table[i - 1].phi);
  }
  EXPECT_NEAR(table.back().x, 0.2, 1e-12);
  std::ostringstream out;
  const std::vector<double> grid = {-0.1, 0.0, 0.1};
  write_yw_csv(out, pair, grid);
  EXPECT_EQ(out.str().substr(0, 27), "x,phi,phi_prime,phi_second\n");
}
