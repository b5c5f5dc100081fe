#include "detail/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <new>

namespace chaos01::detail {

namespace {

// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::size_t good_fft_size(std::size_t n) {
  std::size_t best = 1;
  while (best < n) best *= 2;
  for (std::size_t a = 1; a < best; a *= 2) {
    for (std::size_t b = a; b < best; b *= 3) {
      for (std::size_t c = b; c < best; c *= 5) {
        for (std::size_t d = c; d < best; d *= 7) {
          if (d >= n) best = std::min(best, d);
        }
      }
    }
  }
  return std::max<std::size_t>(best, 1);
}

Autocorrelator::Autocorrelator(std::size_t length, std::size_t max_lag)
    : length_(length), max_lag_(max_lag), fft_size_(good_fft_size(length + max_lag)) {
  buffer_ = fftw_malloc(sizeof(fftw_complex) * fft_size_);
  if (!buffer_) throw std::bad_alloc();
  auto* buf = static_cast<fftw_complex*>(buffer_);
  const int n = static_cast<int>(fft_size_);
  std::lock_guard lock(planner_mutex());
  forward_ = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Autocorrelator::~Autocorrelator() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_));
  fftw_free(buffer_);
}

void Autocorrelator::run(std::span<const std::complex<double>> z, std::span<std::complex<double>> out) {
  auto* buf = reinterpret_cast<std::complex<double>*>(buffer_);
  std::copy(z.begin(), z.end(), buf);
  std::fill(buf + z.size(), buf + fft_size_, std::complex<double>{});
  fftw_execute(static_cast<fftw_plan>(forward_));
  for (std::size_t k = 0; k < fft_size_; ++k) buf[k] = std::norm(buf[k]);
  fftw_execute(static_cast<fftw_plan>(backward_));
  const double scale = 1.0 / static_cast<double>(fft_size_);
  for (std::size_t n = 0; n <= max_lag_ && n < out.size(); ++n) out[n] = buf[n] * scale;
}

std::vector<double> real_dft_magnitudes(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t bins = n / 2 + 1;
  auto* in = static_cast<double*>(fftw_malloc(sizeof(double) * n));
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins));
  if (!in || !out) {
    fftw_free(in);
    fftw_free(out);
    throw std::bad_alloc();
  }
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
  }
  std::copy(x.begin(), x.end(), in);
  fftw_execute(plan);

  std::vector<double> mag(bins);
  for (std::size_t k = 0; k < bins; ++k) mag[k] = std::hypot(out[k][0], out[k][1]);

  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return mag;
}

}  // namespace chaos01::detail
