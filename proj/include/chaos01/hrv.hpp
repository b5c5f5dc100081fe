#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "chaos01/chaos_test.hpp"
#include "chaos01/noise.hpp"
#include "chaos01/series.hpp"

namespace chaos01 {

enum class RrFormat { plain, csv };

// An RR-interval recording; every interval is strictly positive (seconds).
struct RrRecord {
  std::string id;
  Series series;
  std::string source_path;
};

struct LongTermReport {
  std::string id;
  SigmaEstimate sigma;
  KResult k_full;
  double k_lf = 0.0;
  double k_hf = 0.0;
  double mean_rr_s = 0.0;
};

struct LongTermOptions {
  std::size_t window = 5000;
  std::size_t shift = 2500;
  SigmaEstimator estimator = estimate_sigma;
};

// plain: one interval per line, blank lines ignored.
// csv: first comma-separated column; a non-numeric first line is a header.
// Throws ParseError (1-based line) or ValueError for intervals <= 0.
RrRecord read_rr_series(const std::string& path, RrFormat format = RrFormat::plain);

// Format from the extension: .csv -> csv, anything else -> plain.
RrFormat guess_rr_format(const std::string& path);

RrRecord make_rr_record(std::string id, std::vector<double> intervals, std::string source_path = {});

// Keeps the first n intervals (no-op when n >= size).
RrRecord take_prefix(const RrRecord& record, std::size_t n);

// Windowed sigma, full-series K at the windowed mean sigma, and band K over
// LF (0.04-0.15 Hz) and HF (0.15-0.4 Hz) using the mean interval as the
// sampling period.
LongTermReport analyze_long_term(const RrRecord& record, const TestConfig& cfg, const LongTermOptions& opts = {});

}  // namespace chaos01
