#include "chaos01/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chaos01/error.hpp"

namespace chaos01 {

Series::Series(std::vector<double> samples, Unit unit) : samples_(std::move(samples)), unit_(unit) {
  if (samples_.empty()) throw Error(ErrorCode::EmptyInput, "series must hold at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(ErrorCode::ValueError, "non-finite sample at index " + std::to_string(i));
    }
  }
}

double Series::mean() const {
  return std::accumulate(samples_.begin(), samples_.end(), 0.0) / static_cast<double>(samples_.size());
}

Series Series::slice(std::size_t start, std::size_t count) const {
  if (start >= samples_.size() || count == 0 || count > samples_.size() - start) {
    throw Error(ErrorCode::DomainError, "slice out of range");
  }
  const auto first = samples_.begin() + static_cast<std::ptrdiff_t>(start);
  return Series(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(count)), unit_);
}

double median(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "median of empty sequence");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double quantile(std::span<const double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "quantile of empty sequence");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  q = std::clamp(q, 0.0, 1.0);
  const double idx = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(idx));
  const auto hi = static_cast<std::size_t>(std::ceil(idx));
  return v[lo] + (v[hi] - v[lo]) * (idx - static_cast<double>(lo));
}

GroupStats summary_stats(std::span<const double> values, double threshold) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "summary_stats of empty sequence");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::ValueError, "summary_stats input must be finite");
  }

  GroupStats s;
  s.threshold = threshold;
  s.median = median(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;

  std::vector<double> dev(values.size());
  std::transform(values.begin(), values.end(), dev.begin(), [&](double v) { return std::abs(v - s.median); });
  s.mad = median(dev);

  const auto below = std::count_if(values.begin(), values.end(), [&](double v) { return v < threshold; });
  s.frac_below = static_cast<double>(below) / static_cast<double>(values.size());
  return s;
}

double range_of(const Series& series) {
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  return *hi - *lo;
}

}  // namespace chaos01
