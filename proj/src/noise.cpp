#include "chaos01/noise.hpp"

#include <cmath>

#include "chaos01/error.hpp"
#include "chaos01/segment.hpp"

namespace chaos01 {

double estimate_sigma(const Series& series) {
  const auto x = series.samples();
  if (x.size() < 3) throw Error(ErrorCode::TooShort, "sigma estimation needs at least 3 samples");
  double acc = 0.0;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    const double d2 = x[i + 2] - 2.0 * x[i + 1] + x[i];
    acc += d2 * d2;
  }
  return std::sqrt(acc / (6.0 * static_cast<double>(x.size() - 2)));
}

SigmaEstimate windowed_sigma(const Series& series, std::size_t window, std::size_t shift,
                             const SigmaEstimator& estimator) {
  if (series.size() < 3) throw Error(ErrorCode::TooShort, "sigma estimation needs at least 3 samples");
  SigmaEstimate out;
  double acc = 0.0;
  for (const Segment& seg : segment_series(series, window, shift)) {
    const double s = estimator(seg.series);
    out.per_window.push_back({seg.start, s});
    acc += s;
  }
  out.sigma = acc / static_cast<double>(out.per_window.size());
  return out;
}

}  // namespace chaos01
