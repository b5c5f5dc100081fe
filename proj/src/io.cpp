#include "chaos01/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unistd.h>

#include "chaos01/error.hpp"
#include "detail/text.hpp"

namespace chaos01 {

using nlohmann::json;

namespace {

using detail::parse_double;
using detail::trim;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::IoError, "cannot rename onto " + path + ": " + ec.message());
  }
}

std::string series_to_csv(const Series& series) {
  std::string out;
  out.reserve(series.size() * 20);
  for (double v : series) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

Series read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view field = trim(line);
    if (field.empty()) continue;
    field = field.substr(0, field.find(','));
    const std::optional<double> v = parse_double(field);
    if (!v) {
      if (line_no == 1) continue;
      throw ParseError(line_no, "not a number: '" + std::string(field) + "'");
    }
    if (!std::isfinite(*v)) throw Error(ErrorCode::ValueError, "line " + std::to_string(line_no) + ": non-finite");
    values.push_back(*v);
  }
  if (values.empty()) throw Error(ErrorCode::EmptyInput, path + " holds no samples");
  return Series(std::move(values));
}

std::string trajectory_to_csv(const Trajectory2D& traj) {
  std::string out = "n,p,q\n";
  for (std::size_t i = 0; i < traj.p.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_double(traj.p[i]) + ',' + format_double(traj.q[i]) + '\n';
  }
  return out;
}

json to_json(const KResult& r) {
  return {
      {"c_bar", r.c_bar},
      {"sigma", r.sigma},
      {"beta", finite_or_null(r.beta)},
      {"n_cut", r.n_cut},
      {"threshold", r.threshold},
      {"k", r.k},
      {"classification", to_string(r.classification)},
      {"c_grid", r.c_grid},
      {"k_per_c", r.k_per_c},
      {"warnings", r.warnings},
  };
}

json to_json(const LongTermReport& r) {
  json windows = json::array();
  for (const auto& w : r.sigma.per_window) windows.push_back({{"start", w.start}, {"sigma", w.sigma}});
  return {
      {"id", r.id},
      {"mean_rr_s", r.mean_rr_s},
      {"sigma", {{"mean", r.sigma.sigma}, {"per_window", windows}}},
      {"k_full", to_json(r.k_full)},
      {"k_lf", r.k_lf},
      {"k_hf", r.k_hf},
  };
}

json to_json(const BenchRow& row) {
  const auto& s = row.stats;
  const auto& b = row.boxplot;
  json ks = json::array();
  for (const auto& r : row.realizations) ks.push_back(r.k);
  return {
      {"map", row.map_label},
      {"noise", to_string(row.noise_kind)},
      {"pct", row.pct},
      {"stats",
       {{"median", s.median}, {"mad", s.mad}, {"min", s.min}, {"max", s.max},
        {"frac_below", s.frac_below}, {"threshold", s.threshold}}},
      {"boxplot",
       {{"q1", b.q1}, {"median", b.median}, {"q3", b.q3}, {"whisker_lo", b.whisker_lo},
        {"whisker_hi", b.whisker_hi}}},
      {"k", ks},
  };
}

std::string k_per_c_to_csv(const KResult& r) {
  std::string out = "c,k_c\n";
  for (std::size_t i = 0; i < r.c_grid.size(); ++i) {
    out += format_double(r.c_grid[i]) + ',' + format_double(r.k_per_c[i]) + '\n';
  }
  return out;
}

std::string hrv_table_header() { return "id,sigma_mean,k_full,k_lf,k_hf,classification\n"; }

std::string hrv_table_row(const LongTermReport& r) {
  return r.id + ',' + format_double(r.sigma.sigma) + ',' + format_double(r.k_full.k) + ',' + format_double(r.k_lf) +
         ',' + format_double(r.k_hf) + ',' + to_string(r.k_full.classification) + '\n';
}

std::string bench_rows_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "map,noise,pct,median,mad,min,max,frac_below,threshold,q1,q3,whisker_lo,whisker_hi,realizations\n";
  for (const auto& row : rows) {
    const auto& s = row.stats;
    const auto& b = row.boxplot;
    out += row.map_label + ',' + to_string(row.noise_kind) + ',' + format_double(row.pct) + ',' +
           format_double(s.median) + ',' + format_double(s.mad) + ',' + format_double(s.min) + ',' +
           format_double(s.max) + ',' + format_double(s.frac_below) + ',' + format_double(s.threshold) + ',' +
           format_double(b.q1) + ',' + format_double(b.q3) + ',' + format_double(b.whisker_lo) + ',' +
           format_double(b.whisker_hi) + ',' + std::to_string(row.realizations.size()) + '\n';
  }
  return out;
}

std::string bench_realizations_csv(const std::vector<BenchRow>& rows) {
  std::string out = "map,noise,pct,realization,seed,x0,sigma,k\n";
  for (const auto& row : rows) {
    for (const auto& r : row.realizations) {
      out += row.map_label + ',' + to_string(row.noise_kind) + ',' + format_double(row.pct) + ',' +
             std::to_string(r.index) + ',' + std::to_string(r.seed) + ',' + format_double(r.x0) + ',' +
             format_double(r.sigma) + ',' + format_double(r.k) + '\n';
    }
  }
  return out;
}

IgMode parse_ig_mode(const std::string& s) {
  if (s == "oscillatory") return IgMode::oscillatory;
  if (s == "constant-literal" || s == "constant_literal") return IgMode::constant_literal;
  if (s == "off") return IgMode::off;
  throw Error(ErrorCode::InvalidConfig, "unknown ig mode '" + s + "'");
}

const char* to_string(IgMode mode) {
  switch (mode) {
    case IgMode::off: return "off";
    case IgMode::constant_literal: return "constant-literal";
    case IgMode::oscillatory: return "oscillatory";
  }
  return "oscillatory";
}

namespace {

TestConfig parse_test_config(const json& j) {
  TestConfig t;
  if (j.contains("n_cut")) t.n_cut = j.at("n_cut").get<std::size_t>();
  t.ell = j.value("ell", t.ell);
  t.m = j.value("m", t.m);
  if (j.contains("ig_mode")) t.ig_mode = parse_ig_mode(j.at("ig_mode").get<std::string>());
  t.osc_exponent = j.value("osc_exponent", t.osc_exponent);
  t.c_grid_size = j.value("c_grid_size", t.c_grid_size);
  t.c_halfwidth = j.value("c_halfwidth", t.c_halfwidth);
  t.threshold = j.value("threshold", t.threshold);
  if (j.value("strict_paper", false)) {
    t.osc_exponent = 1;
    t.ig_mode = IgMode::constant_literal;
  }
  return t;
}

BenchConfig parse_run(const json& j) {
  BenchConfig c;
  const std::string map = j.at("map").get<std::string>();
  if (map == "logistic") {
    c.map = MapSpec::logistic(j.value("param", 3.97));
  } else if (map == "pm" || map == "pomeau_manneville") {
    c.map = MapSpec::pomeau_manneville(j.value("param", 0.2));
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown map '" + map + "'");
  }
  const std::string noise = j.value("noise", std::string("dynamical"));
  if (noise == "dynamical") {
    c.noise_kind = NoiseKind::dynamical;
  } else if (noise == "output") {
    c.noise_kind = NoiseKind::output;
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown noise kind '" + noise + "'");
  }
  if (j.contains("pct")) c.pct_levels = j.at("pct").get<std::vector<double>>();
  c.realizations = j.value("realizations", c.realizations);
  c.n = j.value("n", c.n);
  c.discard = j.value("discard", c.discard);
  c.seed_base = j.value("seed_base", c.seed_base);
  if (j.contains("x0")) {
    const json& x0 = j.at("x0");
    if (x0.is_string()) {
      if (x0.get<std::string>() != "random") throw Error(ErrorCode::InvalidConfig, "x0 must be \"random\" or a number");
    } else {
      c.x0_policy = X0Policy::at(x0.get<double>());
    }
  }
  if (j.contains("test")) c.test = parse_test_config(j.at("test"));
  c.validate();
  return c;
}

}  // namespace

std::vector<BenchConfig> parse_bench_config(const json& j) {
  try {
    std::vector<BenchConfig> runs;
    if (j.contains("runs")) {
      for (const auto& r : j.at("runs")) runs.push_back(parse_run(r));
    } else {
      runs.push_back(parse_run(j));
    }
    return runs;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("bench config: ") + e.what());
  }
}

std::vector<BenchConfig> read_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return parse_bench_config(j);
}

}  // namespace chaos01
