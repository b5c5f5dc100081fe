#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chaos01/bench.hpp"
#include "chaos01/chaos_test.hpp"
#include "chaos01/hrv.hpp"
#include "chaos01/series.hpp"

namespace chaos01 {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

// One sample per line.
std::string series_to_csv(const Series& series);
// One number per line (first comma-separated field); blank lines skipped and
// a non-numeric first line treated as a header. Throws ParseError.
Series read_series(const std::string& path);

// p-q trace as CSV with header "n,p,q" (n 1-based).
std::string trajectory_to_csv(const Trajectory2D& traj);

nlohmann::json to_json(const KResult& r);
nlohmann::json to_json(const LongTermReport& r);
nlohmann::json to_json(const BenchRow& row);

// "c,k_c" table of the per-frequency values.
std::string k_per_c_to_csv(const KResult& r);

std::string hrv_table_header();
std::string hrv_table_row(const LongTermReport& r);

std::string bench_rows_csv(const std::vector<BenchRow>& rows);
std::string bench_realizations_csv(const std::vector<BenchRow>& rows);

// Bench configuration file: a single run object or {"runs": [ ... ]}.
//   { "map": "logistic" | "pm", "param": 3.97, "noise": "dynamical" | "output",
//     "pct": [0, 2, 5], "realizations": 100, "n": 10000, "discard": 0,
//     "seed_base": 0, "x0": "random" | 0.5,
//     "test": { "n_cut": 1000, "ell": 2, "m": 3, "ig_mode": "oscillatory",
//               "osc_exponent": 2, "c_grid_size": 100, "c_halfwidth": 0.5,
//               "threshold": 0.9 } }
std::vector<BenchConfig> parse_bench_config(const nlohmann::json& j);
std::vector<BenchConfig> read_bench_config(const std::string& path);

IgMode parse_ig_mode(const std::string& s);
const char* to_string(IgMode mode);

}  // namespace chaos01
