#include <gtest/gtest.h>

#include <filesystem>

#include "chaos01/error.hpp"
#include "chaos01/io.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace chaos01;
using chaos01::testing::slurp;
using chaos01::testing::TempDir;
using nlohmann::json;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(0.9925), "0.9925");
  EXPECT_EQ(format_double(-3.0), "-3");
}

TEST(SeriesCsv, RoundTripIsExact) {
  TempDir dir;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Series s(oracle::normal_series(300, 1e-3 + seed, seed));
    const std::string path = dir.file("s" + std::to_string(seed) + ".csv");
    write_file_atomic(path, series_to_csv(s));
    const Series back = read_series(path);
    ASSERT_EQ(back.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(back[i], s[i]);
  }
}

TEST(SeriesCsv, HeaderAndErrors) {
  TempDir dir;
  EXPECT_EQ(read_series(dir.write("h.csv", "x,y\n1,2\n3,4\n")).size(), 2u);
  EXPECT_THROW(read_series(dir.write("b.csv", "1\nfoo\n")), ParseError);
  EXPECT_THROW(read_series(dir.file("missing.csv")), Error);
}

TEST(AtomicWrite, ReplacesAndLeavesNoTemp) {
  TempDir dir;
  const std::string p = dir.file("out.txt");
  write_file_atomic(p, "one");
  write_file_atomic(p, "two");
  EXPECT_EQ(slurp(p), "two");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(std::filesystem::path(p).parent_path()))
    ++files;
  EXPECT_EQ(files, 1u);
}

TEST(Json, KResultFields) {
  KResult r;
  r.c_bar = 1.0;
  r.c_grid = {0.5, 1.5};
  r.k_per_c = {0.1, 0.2};
  r.k = 0.15;
  r.beta = std::numeric_limits<double>::infinity();
  const json j = to_json(r);
  for (const char* key : {"c_bar", "sigma", "beta", "n_cut", "threshold", "k", "classification", "c_grid", "k_per_c",
                          "warnings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["beta"].is_null());
  EXPECT_EQ(j["classification"], "regular");
  EXPECT_EQ(k_per_c_to_csv(r), "c,k_c\n0.5,0.1\n1.5,0.2\n");
}

TEST(Trajectory, Csv) {
  Trajectory2D t;
  t.p = {1, 2};
  t.q = {0, 0.5};
  EXPECT_EQ(trajectory_to_csv(t), "n,p,q\n1,1,0\n2,2,0.5\n");
}

TEST(BenchConfigJson, SingleRun) {
  const auto runs = parse_bench_config(json::parse(R"({
    "map": "pm", "param": 0.25, "noise": "output", "pct": [0, 10],
    "realizations": 7, "n": 3000, "seed_base": 99, "x0": 0.3,
    "test": {"ig_mode": "constant-literal", "c_grid_size": 50}
  })"));
  ASSERT_EQ(runs.size(), 1u);
  const BenchConfig& c = runs[0];
  EXPECT_EQ(c.map.kind, MapKind::pomeau_manneville);
  EXPECT_EQ(c.map.param, 0.25);
  EXPECT_EQ(c.noise_kind, NoiseKind::output);
  EXPECT_EQ(c.pct_levels, (std::vector<double>{0, 10}));
  EXPECT_EQ(c.realizations, 7u);
  EXPECT_EQ(c.seed_base, 99u);
  EXPECT_EQ(c.x0_policy.fixed, 0.3);
  EXPECT_EQ(c.test.ig_mode, IgMode::constant_literal);
  EXPECT_EQ(c.test.c_grid_size, 50u);
}

TEST(BenchConfigJson, RunsArrayAndStrictFlag) {
  const auto runs = parse_bench_config(json::parse(R"({"runs": [
    {"map": "logistic", "x0": "random"},
    {"map": "logistic", "param": 3.5, "test": {"strict_paper": true}}
  ]})"));
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_FALSE(runs[0].x0_policy.fixed.has_value());
  EXPECT_EQ(runs[1].test.osc_exponent, 1);
  EXPECT_EQ(runs[1].test.ig_mode, IgMode::constant_literal);
}

TEST(BenchConfigJson, Rejects) {
  EXPECT_THROW(parse_bench_config(json::parse(R"({"map": "tent"})")), Error);
  EXPECT_THROW(parse_bench_config(json::parse(R"({"map": "logistic", "noise": "pink"})")), Error);
  EXPECT_THROW(parse_bench_config(json::parse(R"({"map": "logistic", "x0": "middle"})")), Error);
  EXPECT_THROW(parse_bench_config(json::parse(R"({"noise": "output"})")), Error);
  EXPECT_THROW(parse_ig_mode("sometimes"), Error);
}
