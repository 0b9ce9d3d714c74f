#include "sdelab/loglog_fit.hpp"

#include <cmath>
#include <vector>

#include "sdelab/errors.hpp"

namespace sdelab {

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "fit: x and y differ in length");
  require(x.size() >= 2, "fit: need at least two points");
  const auto n = static_cast<double>(x.size());
  std::vector<double> lx(x.size()), ly(y.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, "fit: log-log fit needs positive data");
    lx[i] = std::log2(x[i]);
    ly[i] = std::log2(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  require(sxx > 0.0, "fit: abscissae are all equal");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.points = x.size();
  return fit;
}

}  // namespace sdelab
