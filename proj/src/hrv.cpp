#include "chaos01/hrv.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string_view>

#include "chaos01/error.hpp"
#include "detail/text.hpp"

namespace chaos01 {

using detail::parse_double;
using detail::trim;

RrFormat guess_rr_format(const std::string& path) {
  return std::filesystem::path(path).extension() == ".csv" ? RrFormat::csv : RrFormat::plain;
}

RrRecord make_rr_record(std::string id, std::vector<double> intervals, std::string source_path) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (!std::isfinite(intervals[i]) || intervals[i] <= 0.0) {
      throw Error(ErrorCode::ValueError, "interval " + std::to_string(i + 1) + " is not a positive finite number");
    }
  }
  return {std::move(id), Series(std::move(intervals), Unit::seconds), std::move(source_path)};
}

RrRecord read_rr_series(const std::string& path, RrFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view field = trim(line);
    if (field.empty()) continue;
    if (format == RrFormat::csv) field = field.substr(0, field.find(','));

    const std::optional<double> v = parse_double(field);
    if (!v) {
      if (format == RrFormat::csv && line_no == 1) continue;  // header
      throw ParseError(line_no, "not a number: '" + std::string(field) + "'");
    }
    if (!std::isfinite(*v) || *v <= 0.0) {
      throw Error(ErrorCode::ValueError, "line " + std::to_string(line_no) + ": interval must be positive and finite");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw Error(ErrorCode::EmptyInput, path + " holds no intervals");
  return make_rr_record(std::filesystem::path(path).stem().string(), std::move(values), path);
}

RrRecord take_prefix(const RrRecord& record, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidConfig, "--take must be >= 1");
  if (n >= record.series.size()) return record;
  return {record.id, record.series.slice(0, n), record.source_path};
}

LongTermReport analyze_long_term(const RrRecord& record, const TestConfig& cfg, const LongTermOptions& opts) {
  const Series& s = record.series;
  if (s.size() < 20) throw Error(ErrorCode::TooShort, "long-term analysis needs at least 20 intervals");

  LongTermReport r;
  r.id = record.id;
  r.mean_rr_s = s.mean();
  r.sigma = windowed_sigma(s, opts.window, opts.shift, opts.estimator);

  TestConfig full = cfg;
  full.sigma = r.sigma.sigma;
  r.k_full = k_statistic(s, full);
  r.k_lf = band_k(s, full, kLfBand, r.mean_rr_s);
  r.k_hf = band_k(s, full, kHfBand, r.mean_rr_s);
  return r;
}

}  // namespace chaos01
