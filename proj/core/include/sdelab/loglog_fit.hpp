#pragma once

#include <cstddef>
#include <span>

namespace sdelab {

// Ordinary least squares of log2(y) against log2(x).
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

// Requires at least two points with x, y > 0.
LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace sdelab
