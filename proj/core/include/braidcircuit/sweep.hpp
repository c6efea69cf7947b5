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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "braidcircuit/loop_engine.hpp"

namespace braidcircuit {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Engine { Loop, Stabilizer, Dense };

std::string_view engine_name(Engine e);
/// Throws InvalidConfig on an unknown name.
Engine parse_engine(std::string_view name);

struct SweepConfig {
    Engine engine = Engine::Loop;
    std::vector<int> L{16};
    std::vector<double> p{0.5};
    std::vector<double> q{0.5};
    std::vector<double> r{0.0};
    /// Circuit depth; 0 means T = L.
    int T = 0;
    double c = 1.0;
    std::size_t samples = 1024;
    std::uint64_t master_seed = 0;
    KnitMode loop_mode = KnitMode::Pooled;
    std::size_t pool_size = 256;
    /// CSV destination; the manifest goes next to it.
    std::string output;

    /// Throws InvalidConfig on empty grids, bad ranges, or engine/parameter mismatch.
    void validate() const;
    std::string to_json(int indent = 2) const;
    /// Throws ParseError on malformed JSON and InvalidConfig on bad fields.
    static SweepConfig from_json(std::string_view text);
};

struct GridPoint {
    int L = 0;
    int T = 0;
    double p = 0;
    double q = 0;
    double r = 0;
};

/// Grid in row-major order: L outermost, then p, q, r.
std::vector<GridPoint> expand_grid(const SweepConfig &cfg);

struct ResultRecord {
    Engine engine = Engine::Loop;
    int L = 0;
    int T = 0;
    double c = 1.0;
    double p = 0;
    double q = 0;
    double r = 0;
    double q_prime = 0;
    std::size_t samples = 0;    ///< kept samples
    std::size_t discarded = 0;  ///< zero-norm trajectories
    double mean_S = 0;
    double stderr_S = 0;
    std::uint64_t master_seed = 0;
    /// Summed worker time for this point; not part of the CSV.
    double wall_seconds = 0;
};

/// Seed of sample k at grid point `point`.
std::uint64_t sample_seed(std::uint64_t master, std::size_t point, std::size_t k);

/// Entropy samples for one grid point, in sample order. NaN marks a discarded sample.
std::vector<double> run_point(const SweepConfig &cfg, std::size_t point_index, const GridPoint &pt, int workers = 1);

/// Mean and standard error (sample sd / sqrt(N)) over the finite entries.
ResultRecord summarize(const SweepConfig &cfg, const GridPoint &pt, const std::vector<double> &samples);

/// Runs every grid point. Results do not depend on `workers`; 0 picks
/// BRAIDCIRCUIT_WORKERS or the hardware concurrency.
std::vector<ResultRecord> run_sweep(const SweepConfig &cfg, int workers = 0);

/// --workers value, then BRAIDCIRCUIT_WORKERS, then hardware concurrency.
int resolve_workers(int requested);

inline constexpr std::string_view kCsvHeader =
    "engine,L,T,c,p,q,r,q_prime,samples,discarded,mean_S,stderr_S,master_seed";

std::string records_to_csv(const std::vector<ResultRecord> &records);

struct WriteSummary {
    std::filesystem::path csv;
    std::filesystem::path manifest;
    std::size_t rows = 0;
};

/// Path of the manifest written next to a CSV: foo.csv -> foo.manifest.json.
std::filesystem::path manifest_path(const std::filesystem::path &csv);

/// Writes the CSV and its manifest. Throws InvalidConfig on an empty record list
/// and IoError when a file cannot be written.
WriteSummary aggregate_write(const std::vector<ResultRecord> &records, const SweepConfig &cfg,
                             const std::filesystem::path &csv);

/// Reads the config embedded in a manifest.
SweepConfig load_manifest(const std::filesystem::path &path);
SweepConfig load_config(const std::filesystem::path &path);

}  // namespace braidcircuit
