#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "functions.hpp"
#include "sdelab/besov.hpp"
#include "sdelab/drift.hpp"
#include "sdelab/errors.hpp"

using namespace sdelab;

namespace {

const SpectralGrid kGrid(16.0, 1024);
// Frequencies are integers on this grid.
const SpectralGrid kUnitGrid(std::numbers::pi, 4096);

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  return d;
}

}  // namespace

TEST(SpectralGrid, RejectsBadSizes) {
  EXPECT_THROW(SpectralGrid(16.0, 100), ValidationError);
  EXPECT_THROW(SpectralGrid(16.0, 32), ValidationError);
  EXPECT_THROW(SpectralGrid(-1.0, 128), ValidationError);
}

TEST(SpectralGrid, MaxBlockBelowNyquist) {
  for (std::size_t n : {64u, 256u, 1024u, 16384u}) {
    for (double L : {std::numbers::pi, 16.0, 512.0}) {
      if (std::numbers::pi * static_cast<double>(n) / (2 * L) <= 2.0) {
        EXPECT_THROW(SpectralGrid(L, n), ValidationError);
        continue;
      }
      const SpectralGrid g(L, n);
      EXPECT_GT(g.nyquist(), std::ldexp(1.0, g.max_block() + 1));
      EXPECT_LE(g.nyquist(), std::ldexp(1.0, g.max_block() + 2));
    }
  }
}

TEST(GridFunction, RoundTripAndHermitian) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  std::vector<double> v(kGrid.size());
  for (auto& x : v) x = normal(rng);
  const auto f = GridFunction::from_values(kGrid, v);
  const auto g = GridFunction::from_coefficients(
      kGrid, {f.coefficients().begin(), f.coefficients().end()});
  EXPECT_LT(max_abs_diff(f, g), 1e-12);
  EXPECT_EQ(f.coefficients().front().imag(), 0.0);
  EXPECT_EQ(f.coefficients().back().imag(), 0.0);
}

TEST(GridFunction, OversampledMatchesKnots) {
  const auto f = testfn::single_mode(kGrid, 37, 1.3, 0.4);
  const auto fine = f.oversampled(8);
  for (std::size_t i = 0; i < kGrid.size(); ++i) EXPECT_NEAR(fine[8 * i], f.values()[i], 1e-12);
  const double xi = kGrid.frequency(37);
  const double dx = kGrid.spacing() / 8.0;
  for (std::size_t i = 0; i < fine.size(); i += 13) {
    EXPECT_NEAR(fine[i], 1.3 * std::sin(xi * (-16.0 + dx * static_cast<double>(i)) + 0.4),
                1e-11);
  }
}

TEST(DyadicPartition, PartitionOfUnity) {
  const DyadicPartition part(kGrid);
  for (std::size_t k = 0; k < kGrid.num_modes(); ++k) {
    if (kGrid.frequency(k) > part.resolved_frequency()) break;
    double s = 0.0;
    for (int j = -1; j <= part.max_block(); ++j) s += part.weights(j)[k];
    EXPECT_NEAR(s, 1.0, 1e-12) << "mode " << k;
  }
}

TEST(DyadicPartition, Support) {
  for (double xi = 0.0; xi < 4096.0; xi += 0.37) {
    if (xi > 1.0) EXPECT_EQ(DyadicPartition::weight(-1, xi), 0.0);
    for (int j = 0; j <= 10; ++j) {
      const double lo = std::ldexp(1.0, j - 1), hi = std::ldexp(1.0, j + 1);
      if (xi < lo || xi > hi) EXPECT_EQ(DyadicPartition::weight(j, xi), 0.0);
      const double w = DyadicPartition::weight(j, xi);
      EXPECT_GE(w, 0.0);
      EXPECT_LE(w, 1.0);
    }
  }
}

TEST(DyadicPartition, PlateauIsOne) {
  for (int j = 0; j <= 8; ++j) {
    for (double r = 1.0; r <= 1.5; r += 0.05) {
      EXPECT_EQ(DyadicPartition::weight(j, r * std::ldexp(1.0, j)), 1.0);
    }
  }
}

TEST(LpBlock, ZeroFunction) {
  const auto z = GridFunction::zero(kGrid);
  for (int j = -1; j <= kGrid.max_block(); ++j) EXPECT_EQ(lp_block(z, j).sup_norm(), 0.0);
}

TEST(LpBlock, RangeChecked) {
  const auto z = GridFunction::zero(kGrid);
  EXPECT_THROW(lp_block(z, -2), ValidationError);
  EXPECT_THROW(lp_block(z, kGrid.max_block() + 1), ValidationError);
}

TEST(LpBlock, SingleFrequencyIsolated) {
  for (const auto& mode : lacunary_modes(kGrid)) {
    const auto f = testfn::single_mode(kGrid, mode.mode, 0.7, 0.3);
    for (int j = -1; j <= kGrid.max_block(); ++j) {
      const auto block = lp_block(f, j);
      if (j == mode.block) {
        EXPECT_LT(max_abs_diff(block, f), 1e-10);
      } else {
        EXPECT_LT(block.sup_norm(), 1e-10);
      }
    }
  }
}

TEST(LpBlock, DisjointBlocksSplitSum) {
  const auto modes = lacunary_modes(kGrid);
  const auto f1 = testfn::single_mode(kGrid, modes[2].mode, 1.0);
  const auto f2 = testfn::single_mode(kGrid, modes[5].mode, 2.0, 1.0);
  const auto f = f1 + f2;
  EXPECT_LT(max_abs_diff(lp_block(f, modes[2].block), f1), 1e-10);
  EXPECT_LT(max_abs_diff(lp_block(f, modes[5].block), f2), 1e-10);
}

TEST(LpBlock, Reconstruction) {
  std::mt19937_64 rng(7);
  const DyadicPartition part(kGrid);
  const auto max_mode = kGrid.nearest_mode(part.resolved_frequency()) - 1;
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = testfn::random_band_limited(kGrid, max_mode, rng);
    auto sum = GridFunction::zero(kGrid);
    for (int j = -1; j <= kGrid.max_block(); ++j) sum += lp_block(f, j);
    EXPECT_LT(max_abs_diff(sum, f), 1e-9);
  }
}

TEST(BesovNorm, Zero) { EXPECT_EQ(besov_norm(GridFunction::zero(kGrid), 0.5), 0.0); }

TEST(BesovNorm, SingleFrequencyIsWeightedSup) {
  for (const auto& mode : lacunary_modes(kGrid)) {
    const auto f = testfn::single_mode(kGrid, mode.mode, 2.5, 0.2);
    for (double gamma : {-1.5, -0.3, 0.0, 0.5, 2.0}) {
      const double direct = std::exp2(mode.block * gamma) * f.sup_norm();
      EXPECT_NEAR(besov_norm(f, gamma), direct, 1e-10 * std::max(1.0, direct));
    }
  }
}

TEST(BesovNorm, Homogeneous) {
  std::mt19937_64 rng(3);
  const auto f = testfn::random_band_limited(kGrid, 200, rng);
  for (double c : {-3.0, 0.5, 10.0}) {
    EXPECT_NEAR(besov_norm(c * f, 0.4), std::abs(c) * besov_norm(f, 0.4),
                1e-12 * std::abs(c) * besov_norm(f, 0.4));
  }
}

TEST(BesovNorm, GammaRange) {
  const auto f = testfn::single_mode(kGrid, 10, 1.0);
  EXPECT_THROW(besov_norm(f, 7.0), ValidationError);
  EXPECT_THROW(besov_norm(f, -2.5), ValidationError);
  EXPECT_NO_THROW(besov_norm(f, 3.0));
  EXPECT_NO_THROW(besov_norm(f, -2.0));
}

TEST(BesovNorm, PositiveForNonzero) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = testfn::random_band_limited(kGrid, 1 + trial * 30, rng);
    EXPECT_GT(besov_norm(f, -1.0), 0.0);
  }
}

TEST(BesovNorm, TableCsv) {
  const auto f = testfn::single_mode(kGrid, 20, 1.0);
  const auto table = besov_table(f, 0.5);
  ASSERT_EQ(table.size(), static_cast<std::size_t>(kGrid.max_block() + 2));
  std::ostringstream out;
  write_block_table_csv(out, table);
  EXPECT_EQ(out.str().substr(0, 21), "j,block_sup,weighted\n");
}

TEST(HolderNorm, ConstantHasNoSeminorm) {
  const auto c = GridFunction::sample(kGrid, [](double) { return -2.5; });
  EXPECT_NEAR(holder_norm(c, 0.5), 2.5, 1e-14);
}

TEST(HolderNorm, SineWindow) {
  const auto f = GridFunction::sample(kUnitGrid, [](double x) { return std::sin(x); });
  const double norm = holder_norm(f, 0.5);
  EXPECT_GE(norm, 1.0);
  EXPECT_LE(norm, 1.0 + std::numbers::sqrt2);
  const double h = kUnitGrid.spacing();
  const double lower = std::abs(1.0 - std::sin(std::numbers::pi / 2 - h)) / std::sqrt(h);
  EXPECT_GE(norm - 1.0, lower - 1e-12);
}

TEST(HolderNorm, FinerGridOnlyRaisesPairScan) {
  const auto coarse = GridFunction::sample(SpectralGrid(std::numbers::pi, 256),
                                           [](double x) { return std::sin(3.0 * x); });
  const auto fine = GridFunction::sample(SpectralGrid(std::numbers::pi, 4096),
                                         [](double x) { return std::sin(3.0 * x); });
  const double a = holder_norm(coarse, 0.7), b = holder_norm(fine, 0.7);
  EXPECT_LE(a, b + 1e-12);
  EXPECT_NEAR(a, b, 0.02 * b);
}

TEST(HolderNorm, RejectsIntegerExponents) {
  const auto f = testfn::single_mode(kGrid, 3, 1.0);
  EXPECT_THROW(holder_norm(f, 0.0), ValidationError);
  EXPECT_THROW(holder_norm(f, 1.0), ValidationError);
  EXPECT_THROW(holder_norm(f, 2.0), ValidationError);
  EXPECT_NO_THROW(holder_norm(f, 1.5));
}

TEST(HolderNorm, EquivalenceConstantsStable) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> modes(4, 300);
  for (double gamma : {0.3, 0.7, 1.4}) {
    double lo = 1e300, hi = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = testfn::random_band_limited(kGrid, modes(rng), rng);
      const double ratio = besov_norm(f, gamma) / holder_norm(f, gamma);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi / lo, 8.0) << "gamma " << gamma;
  }
}

TEST(HeatSemigroup, Identity) {
  std::mt19937_64 rng(2);
  const auto f = testfn::random_band_limited(kGrid, 100, rng);
  EXPECT_EQ(max_abs_diff(heat_semigroup(f, 0.0), f), 0.0);
}

TEST(HeatSemigroup, Eigenfunction) {
  const std::size_t k = 17;
  const double xi = kGrid.frequency(k), t = 0.3;
  const auto f = testfn::single_mode(kGrid, k, 1.0);
  const auto expected = testfn::single_mode(kGrid, k, std::exp(-xi * xi * t / 2));
  EXPECT_LT(max_abs_diff(heat_semigroup(f, t), expected), 1e-13);
}

TEST(HeatSemigroup, ConstantPreserved) {
  const auto c = GridFunction::sample(kGrid, [](double) { return 4.0; });
  EXPECT_LT(max_abs_diff(heat_semigroup(c, 10.0), c), 1e-13);
}

TEST(HeatSemigroup, SemigroupLaw) {
  std::mt19937_64 rng(9);
  const auto f = testfn::random_band_limited(kGrid, 400, rng);
  for (auto [s, t] : {std::pair{0.01, 0.02}, std::pair{0.1, 0.5}, std::pair{1e-4, 2.0}}) {
    EXPECT_LT(max_abs_diff(heat_semigroup(heat_semigroup(f, s), t), heat_semigroup(f, s + t)),
              1e-10);
  }
}

TEST(HeatSemigroup, NegativeTimeRejected) {
  EXPECT_THROW(heat_semigroup(GridFunction::zero(kGrid), -0.1), ValidationError);
}

TEST(Bernstein, ZeroConvention) {
  EXPECT_EQ(check_bernstein(GridFunction::zero(kGrid), 0.5).ratio, 0.0);
}

TEST(Bernstein, SingleFrequencyRatio) {
  for (const auto& mode : lacunary_modes(kGrid)) {
    const auto f = testfn::single_mode(kGrid, mode.mode, 1.0, 0.1);
    const auto fx = f.derivative();
    const double expected = fx.sup_norm() / f.sup_norm() / std::ldexp(1.0, mode.block);
    const auto report = check_bernstein(f, 0.3);
    EXPECT_NEAR(report.ratio, expected, 1e-10);
    EXPECT_GE(report.ratio, 0.5);
    EXPECT_LE(report.ratio, 2.0);
  }
}

TEST(Bernstein, CorpusBound) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> modes(1, 400);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testfn::random_band_limited(kGrid, modes(rng), rng);
    worst = std::max(worst, check_bernstein(f, 0.5).ratio);
  }
  EXPECT_LE(worst, 4.0);
}

TEST(Schauder, SingleFrequencyApproximationSlope) {
  const auto f = testfn::single_mode(kUnitGrid, 8, 1.0);
  const std::vector<double> times = {1e-5, 2e-5, 4e-5, 8e-5, 1.6e-4};
  for (double theta : {0.25, 0.5, 0.75}) {
    const auto report = check_schauder(f, 0.5, theta, times);
    EXPECT_GE(report.approximation_slope, std::min(theta, 1.0) - 0.1);
  }
}

TEST(Schauder, LacunaryBlowUpSlope) {
  const double gamma = 0.2, theta = 0.25, theta_prime = 0.6;
  const double reg = gamma + 2 * theta;
  const int top = kUnitGrid.max_block();
  const auto f = GridFunction::sample(kUnitGrid, [&](double x) {
    double s = 0.0;
    for (int j = 0; j <= top; ++j) s += std::exp2(-j * reg) * std::sin(std::ldexp(x, j));
    return s;
  });
  std::vector<double> times;
  for (int k = 14; k >= 4; --k) times.push_back(std::ldexp(1.0, -k));
  const auto report = check_schauder(f, gamma, theta_prime, times);
  const double expected = -(theta_prime - theta);
  EXPECT_GE(report.smoothing_slope, expected - 0.15);
  EXPECT_LE(report.smoothing_slope, expected + 0.15);
  EXPECT_NEAR(report.approximation_slope, theta, 0.15);
}

TEST(Schauder, ThetaZeroContracts) {
  std::mt19937_64 rng(4);
  const auto f = testfn::random_band_limited(kGrid, 300, rng);
  const std::vector<double> times = {1e-3, 1e-2, 1e-1, 1.0};
  const auto report = check_schauder(f, 0.5, 0.0, times);
  for (double v : report.smoothing_norms) EXPECT_LE(v, besov_norm(f, 0.5) * (1 + 1e-9));
}

TEST(Schauder, DegenerateInputs) {
  const auto f = testfn::single_mode(kGrid, 5, 1.0);
  const std::vector<double> two = {0.1, 0.2};
  const std::vector<double> three = {0.1, 0.2, 0.4};
  EXPECT_THROW(check_schauder(f, 0.5, 0.25, two), ValidationError);
  EXPECT_THROW(check_schauder(GridFunction::zero(kGrid), 0.5, 0.25, three), ValidationError);
  EXPECT_THROW(check_schauder(f, 0.5, 1.0, three), ValidationError);
}
