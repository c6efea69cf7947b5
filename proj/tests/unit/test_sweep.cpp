// Copyright 2026 The braidcircuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidcircuit/errors.hpp"
#include "braidcircuit/sweep.hpp"

namespace braidcircuit {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "braidcircuit_unit";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SweepConfig small_config(Engine e) {
    SweepConfig cfg;
    cfg.engine = e;
    cfg.L = {8, 16};
    cfg.p = {0.5};
    cfg.q = {0.3, 0.5};
    cfg.r = {0.0};
    cfg.samples = 100;
    cfg.master_seed = 17;
    return cfg;
}

TEST(Sweep, EngineNames) {
    for (Engine e : {Engine::Loop, Engine::Stabilizer, Engine::Dense}) {
        EXPECT_EQ(parse_engine(engine_name(e)), e);
    }
    EXPECT_THROW(parse_engine("tensor"), InvalidConfig);
}

TEST(Sweep, GridOrder) {
    auto cfg = small_config(Engine::Loop);
    cfg.r = {0.0, 0.1};
    const auto pts = expand_grid(cfg);
    ASSERT_EQ(pts.size(), 8U);
    EXPECT_EQ(pts[0].L, 8);
    EXPECT_EQ(pts[0].T, 8);
    EXPECT_DOUBLE_EQ(pts[1].r, 0.1);
    EXPECT_DOUBLE_EQ(pts[2].q, 0.5);
    EXPECT_EQ(pts[4].L, 16);
}

TEST(Sweep, ValidationErrors) {
    auto cfg = small_config(Engine::Stabilizer);
    cfg.c = 0.5;
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = small_config(Engine::Loop);
    cfg.L = {};
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = small_config(Engine::Loop);
    cfg.L = {7};
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = small_config(Engine::Dense);
    cfg.L = {32};
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = small_config(Engine::Loop);
    cfg.q = {1.5};
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = small_config(Engine::Loop);
    cfg.samples = 0;
    EXPECT_THROW(cfg.validate(), InvalidConfig);
}

TEST(Sweep, ConfigJsonRoundTrip) {
    auto cfg = small_config(Engine::Stabilizer);
    cfg.loop_mode = KnitMode::Independent;
    cfg.pool_size = 64;
    cfg.output = "out.csv";
    const auto back = SweepConfig::from_json(cfg.to_json());
    EXPECT_EQ(back.to_json(), cfg.to_json());
    EXPECT_THROW(SweepConfig::from_json(R"({"engine":"loop","bogus":1})"), InvalidConfig);
    EXPECT_THROW(SweepConfig::from_json("{"), ParseError);
}

TEST(Sweep, ScalarGridValues) {
    const auto cfg = SweepConfig::from_json(R"({"engine":"loop","L":32,"p":0.5,"q":0.5,"r":0.1})");
    EXPECT_EQ(cfg.L, std::vector<int>{32});
    EXPECT_EQ(cfg.r, std::vector<double>{0.1});
}

TEST(Sweep, UnitaryCircuitGivesFullEntropy) {
    for (Engine e : {Engine::Loop, Engine::Stabilizer, Engine::Dense}) {
        SweepConfig cfg;
        cfg.engine = e;
        cfg.L = {e == Engine::Dense ? 6 : 16};
        cfg.p = {1.0};
        cfg.samples = 40;
        const auto rec = run_sweep(cfg, 2);
        ASSERT_EQ(rec.size(), 1U);
        EXPECT_NEAR(rec[0].mean_S, cfg.L[0], 1e-9) << engine_name(e);
        EXPECT_NEAR(rec[0].stderr_S, 0.0, 1e-9);
        EXPECT_EQ(rec[0].samples, 40U);
    }
}

TEST(Sweep, SummaryStatistics) {
    SweepConfig cfg;
    GridPoint pt{4, 4, 0.5, 0.5, 0.0};
    const auto rec = summarize(cfg, pt, {1.0, 3.0, std::nan(""), 2.0});
    EXPECT_EQ(rec.samples, 3U);
    EXPECT_EQ(rec.discarded, 1U);
    EXPECT_DOUBLE_EQ(rec.mean_S, 2.0);
    EXPECT_NEAR(rec.stderr_S, 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_DOUBLE_EQ(rec.q_prime, q_prime(0.5, 0.5));
}

TEST(Sweep, ResultsIndependentOfWorkerCount) {
    for (Engine e : {Engine::Loop, Engine::Stabilizer}) {
        auto cfg = small_config(e);
        const auto a = records_to_csv(run_sweep(cfg, 1));
        const auto b = records_to_csv(run_sweep(cfg, 3));
        EXPECT_EQ(a, b) << engine_name(e);
    }
    auto cfg = small_config(Engine::Loop);
    cfg.loop_mode = KnitMode::Independent;
    EXPECT_EQ(records_to_csv(run_sweep(cfg, 1)), records_to_csv(run_sweep(cfg, 4)));
}

TEST(Sweep, CsvLayout) {
    const auto csv = records_to_csv(run_sweep(small_config(Engine::Loop), 1));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kCsvHeader);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 12);
        EXPECT_EQ(line.rfind("loop,", 0), 0U);
    }
    EXPECT_EQ(rows, 4);
}

TEST(Sweep, WriteAndReplayFromManifest) {
    auto cfg = small_config(Engine::Loop);
    const auto csv = scratch("replay.csv");
    cfg.output = csv.string();
    const auto summary = aggregate_write(run_sweep(cfg, 2), cfg, csv);
    EXPECT_EQ(summary.rows, 4U);
    EXPECT_EQ(summary.manifest, manifest_path(csv));
    EXPECT_EQ(manifest_path(fs::path("a/b.csv")), fs::path("a/b.manifest.json"));
    const std::string first = slurp(csv);
    const auto replayed = load_manifest(summary.manifest);
    aggregate_write(run_sweep(replayed, 1), replayed, csv);
    EXPECT_EQ(slurp(csv), first);
}

TEST(Sweep, WriteErrors) {
    const auto cfg = small_config(Engine::Loop);
    EXPECT_THROW(aggregate_write({}, cfg, scratch("empty.csv")), InvalidConfig);
    const auto rec = run_sweep(cfg, 1);
    // A regular file in place of the parent directory makes the write fail.
    const auto blocker = scratch("blocker");
    std::ofstream(blocker) << "x";
    EXPECT_THROW(aggregate_write(rec, cfg, blocker / "x.csv"), IoError);
    EXPECT_THROW(load_manifest(blocker / "x.manifest.json"), IoError);
}

TEST(Sweep, SampleSeedsAreDistinct) {
    EXPECT_NE(sample_seed(1, 0, 0), sample_seed(1, 0, 1));
    EXPECT_NE(sample_seed(1, 0, 0), sample_seed(1, 1, 0));
    EXPECT_NE(sample_seed(1, 0, 0), sample_seed(2, 0, 0));
}

TEST(Sweep, WorkerResolution) {
    EXPECT_EQ(resolve_workers(3), 3);
    EXPECT_GE(resolve_workers(0), 1);
}

}  // namespace
}  // namespace braidcircuit
