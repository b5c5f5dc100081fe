#include "chaos01/segment.hpp"

#include <algorithm>

#include "chaos01/error.hpp"

namespace chaos01 {

std::vector<std::size_t> segment_starts(std::size_t n, std::size_t window, std::size_t shift) {
  if (window < 3) throw Error(ErrorCode::InvalidConfig, "window must be >= 3");
  if (shift < 1) throw Error(ErrorCode::InvalidConfig, "shift must be >= 1");
  if (n <= window) return {0};

  std::vector<std::size_t> starts;
  std::size_t s = 0;
  for (; s + window <= n; s += shift) starts.push_back(s);
  if (starts.back() + window != n) starts.push_back(n - window);
  return starts;
}

std::vector<Segment> segment_series(const Series& series, std::size_t window, std::size_t shift) {
  std::vector<Segment> out;
  const std::size_t len = std::min(window, series.size());
  for (std::size_t start : segment_starts(series.size(), window, shift)) {
    out.push_back({start, series.slice(start, len)});
  }
  return out;
}

}  // namespace chaos01
