#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace chaos01 {

enum class Unit { seconds, unitless };

// Ordered, non-empty sequence of finite samples. Construction validates;
// the samples are immutable afterwards.
class Series {
 public:
  explicit Series(std::vector<double> samples, Unit unit = Unit::unitless);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }
  Unit unit() const noexcept { return unit_; }

  double mean() const;
  // Contiguous sub-series [start, start + count).
  Series slice(std::size_t start, std::size_t count) const;

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

 private:
  std::vector<double> samples_;
  Unit unit_;
};

struct GroupStats {
  double median = 0.0;
  double mad = 0.0;
  double min = 0.0;
  double max = 0.0;
  double frac_below = 0.0;  // fraction of values strictly below threshold
  double threshold = 0.0;
};

// Median with the mean-of-middle-two convention for even lengths.
// Throws EmptyInput.
double median(std::span<const double> values);

// Linearly interpolated quantile over order statistics at q*(n-1).
double quantile(std::span<const double> values, double q);

GroupStats summary_stats(std::span<const double> values, double threshold);

double range_of(const Series& series);

}  // namespace chaos01
