#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chaos01/series.hpp"

namespace chaos01 {

struct WindowSigma {
  std::size_t start = 0;  // 0-based index of the first sample in the window
  double sigma = 0.0;
};

struct SigmaEstimate {
  double sigma = 0.0;                  // unweighted mean of per_window when windowed
  std::vector<WindowSigma> per_window;
};

// Any map Series -> sigma can stand in for the default estimator.
using SigmaEstimator = std::function<double(const Series&)>;

// Second-difference white-noise estimator:
//   sigma^2 = sum_i (x[i+2] - 2 x[i+1] + x[i])^2 / (6 (N - 2)).
// Exact for i.i.d. noise (E[(d2 x)^2] = 6 sigma^2); smooth trends contribute
// only through their own second differences. Throws TooShort for N < 3.
double estimate_sigma(const Series& series);

SigmaEstimate windowed_sigma(const Series& series, std::size_t window = 5000, std::size_t shift = 2500,
                             const SigmaEstimator& estimator = estimate_sigma);

}  // namespace chaos01
