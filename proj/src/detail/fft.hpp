#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace chaos01::detail {

// Smallest 2^a 3^b 5^c 7^d >= n.
std::size_t good_fft_size(std::size_t n);

// Linear (non-circular) autocorrelation r[n] = sum_j z[j+n] conj(z[j]) for
// lags 0..max_lag of complex sequences of a fixed length. Owns its FFTW plans
// and buffers; one instance per thread.
class Autocorrelator {
 public:
  Autocorrelator(std::size_t length, std::size_t max_lag);
  ~Autocorrelator();
  Autocorrelator(const Autocorrelator&) = delete;
  Autocorrelator& operator=(const Autocorrelator&) = delete;

  std::size_t length() const noexcept { return length_; }

  // out.size() must be max_lag + 1.
  void run(std::span<const std::complex<double>> z, std::span<std::complex<double>> out);

 private:
  std::size_t length_;
  std::size_t max_lag_;
  std::size_t fft_size_;
  void* buffer_ = nullptr;
  void* forward_ = nullptr;
  void* backward_ = nullptr;
};

// |X_k| for k = 0..n/2 of the DFT of a real sequence.
std::vector<double> real_dft_magnitudes(std::span<const double> x);

}  // namespace chaos01::detail
