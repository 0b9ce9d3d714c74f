#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace sdelab::detail {
namespace {

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
using RealBuffer = std::unique_ptr<double[], FftwFree>;
using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

RealBuffer make_real(std::size_t n) {
  return RealBuffer(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
}
ComplexBuffer make_complex(std::size_t n) {
  return ComplexBuffer(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW's planner is not thread-safe; execution with new arrays is. Plans are
// built once per size under a lock and never destroyed. FFTW_ESTIMATE keeps
// the chosen algorithm (and therefore round-off) identical across runs.
const PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto real = make_real(n);
  auto spectrum = make_complex(n / 2 + 1);
  PlanPair plans;
  const int size = static_cast<int>(n);
  plans.forward =
      fftw_plan_dft_r2c_1d(size, real.get(), spectrum.get(), FFTW_ESTIMATE);
  plans.backward =
      fftw_plan_dft_c2r_1d(size, spectrum.get(), real.get(), FFTW_ESTIMATE);
  return cache.emplace(n, plans).first->second;
}

}  // namespace

std::vector<std::complex<double>> forward_fft(std::span<const double> values) {
  const std::size_t n = values.size();
  const auto& plans = plans_for(n);
  auto real = make_real(n);
  auto spectrum = make_complex(n / 2 + 1);
  std::copy(values.begin(), values.end(), real.get());
  fftw_execute_dft_r2c(plans.forward, real.get(), spectrum.get());

  std::vector<std::complex<double>> out(n / 2 + 1);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = {spectrum[k][0] * scale, spectrum[k][1] * scale};
  }
  return out;
}

std::vector<double> inverse_fft(std::span<const std::complex<double>> coefficients,
                                std::size_t n) {
  const auto& plans = plans_for(n);
  const std::size_t modes = n / 2 + 1;
  auto real = make_real(n);
  auto spectrum = make_complex(modes);
  const std::size_t used = std::min(modes, coefficients.size());
  for (std::size_t k = 0; k < modes; ++k) {
    if (k < used) {
      spectrum[k][0] = coefficients[k].real();
      spectrum[k][1] = coefficients[k].imag();
    } else {
      spectrum[k][0] = 0.0;
      spectrum[k][1] = 0.0;
    }
  }
  // c2r destroys its input; the buffer is private so that is fine.
  fftw_execute_dft_c2r(plans.backward, spectrum.get(), real.get());
  return std::vector<double>(real.get(), real.get() + n);
}

}  // namespace sdelab::detail
