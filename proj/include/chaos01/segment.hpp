#pragma once

#include <cstddef>
#include <vector>

#include "chaos01/series.hpp"

namespace chaos01 {

struct Segment {
  std::size_t start = 0;  // 0-based
  Series series;
};

// Overlapping windows of `window` samples whose starts advance by `shift`.
// When the regular grid does not end on the last sample, one more window is
// appended covering exactly the last `window` samples. A series shorter than
// `window` yields a single window holding the whole series.
std::vector<Segment> segment_series(const Series& series, std::size_t window = 5000, std::size_t shift = 2500);

// Start offsets only; same rule as segment_series.
std::vector<std::size_t> segment_starts(std::size_t n, std::size_t window, std::size_t shift);

}  // namespace chaos01
