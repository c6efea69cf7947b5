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

#include "braidcircuit/sweep.hpp"

#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "braidcircuit/circuit_layout.hpp"
#include "braidcircuit/dense_engine.hpp"
#include "braidcircuit/errors.hpp"
#include "braidcircuit/random.hpp"
#include "braidcircuit/stabilizer_engine.hpp"
#include "json.hpp"

namespace braidcircuit {

namespace {

using json = nlohmann::ordered_json;

// Samples per work item for the per-trajectory engines.
constexpr std::size_t kChunk = 32;
constexpr std::uint64_t kPoolTag = 0x706f6f6cULL;

int effective_T(const SweepConfig &cfg, int L) {
    return cfg.T > 0 ? cfg.T : L;
}

bool is_pow2(int v) {
    return v > 0 && std::has_single_bit(static_cast<unsigned>(v));
}

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

template <class T>
std::vector<T> scalar_or_array(const json &j, const char *key) {
    const auto &v = j.at(key);
    if (v.is_array()) {
        return v.get<std::vector<T>>();
    }
    return {v.get<T>()};
}

struct WorkItem {
    std::size_t point;
    std::size_t first;
    std::size_t count;
};

/// Fills out[first, first + count) for one work item.
void run_item(const SweepConfig &cfg, const GridPoint &pt, const WorkItem &item, double *out) {
    const GateProbabilities probs{pt.p, pt.q, pt.r};
    const bool pooled = cfg.engine == Engine::Loop && cfg.loop_mode == KnitMode::Pooled;
    if (pooled) {
        KnitOptions opt;
        opt.mode = KnitMode::Pooled;
        opt.pool_size = cfg.pool_size;
        const std::uint64_t seed = mix_key(cfg.master_seed ^ kPoolTag, item.point, item.first / cfg.pool_size);
        const auto stripes = knit_samples(pt.L, pt.T, probs, seed, opt, item.count);
        for (std::size_t i = 0; i < item.count; ++i) {
            out[item.first + i] = spanning_number(stripes[i]);
        }
        return;
    }
    for (std::size_t k = item.first; k < item.first + item.count; ++k) {
        const std::uint64_t seed = sample_seed(cfg.master_seed, item.point, k);
        switch (cfg.engine) {
            case Engine::Loop:
                out[k] = spanning_number(knit_sample(pt.L, pt.T, probs, seed, KnitMode::Independent));
                break;
            case Engine::Stabilizer:
                out[k] = stabilizer_entropy(sample_layout(pt.L, pt.T, pt.p, pt.q, pt.r, seed, 1.0));
                break;
            case Engine::Dense:
                try {
                    out[k] = trajectory_entropy(sample_layout(pt.L, pt.T, pt.p, pt.q, pt.r, seed, cfg.c));
                } catch (const ZeroNormTrajectory &) {
                    out[k] = std::numeric_limits<double>::quiet_NaN();
                }
                break;
        }
    }
}

std::vector<WorkItem> items_for(const SweepConfig &cfg, std::size_t point) {
    const bool pooled = cfg.engine == Engine::Loop && cfg.loop_mode == KnitMode::Pooled;
    const std::size_t chunk = pooled ? cfg.pool_size : kChunk;
    std::vector<WorkItem> items;
    for (std::size_t first = 0; first < cfg.samples; first += chunk) {
        items.push_back({point, first, std::min(chunk, cfg.samples - first)});
    }
    return items;
}

/// Executes items on `workers` threads; per-item durations land in `seconds`.
void execute(const SweepConfig &cfg, const std::vector<GridPoint> &grid, const std::vector<WorkItem> &items,
             std::vector<std::vector<double>> &results, std::vector<double> &seconds, int workers) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) {
                return;
            }
            {
                std::lock_guard lock(failure_mu);
                if (failure) {
                    return;
                }
            }
            const auto &item = items[i];
            const auto start = std::chrono::steady_clock::now();
            try {
                run_item(cfg, grid[item.point], item, results[item.point].data());
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
            seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(items.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::Loop:
            return "loop";
        case Engine::Stabilizer:
            return "stabilizer";
        case Engine::Dense:
            return "dense";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    if (name == "loop") {
        return Engine::Loop;
    }
    if (name == "stabilizer") {
        return Engine::Stabilizer;
    }
    if (name == "dense") {
        return Engine::Dense;
    }
    throw InvalidConfig("unknown engine '" + std::string(name) + "'");
}

void SweepConfig::validate() const {
    if (samples < 1) {
        throw InvalidConfig("samples must be at least 1");
    }
    if (L.empty() || p.empty() || q.empty() || r.empty()) {
        throw InvalidConfig("every grid axis needs at least one value");
    }
    if (T < 0) {
        throw InvalidConfig("T must be non-negative (0 means T = L)");
    }
    if (!std::isfinite(c)) {
        throw InvalidConfig("c must be finite");
    }
    for (const auto *axis : {&p, &q, &r}) {
        for (double v : *axis) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw InvalidConfig("probabilities must lie in [0, 1]");
            }
        }
    }
    for (int l : L) {
        if (l < 2 || l % 2 != 0) {
            throw InvalidConfig("L must be even and at least 2");
        }
        if (engine == Engine::Dense && l > kMaxOperatorSites) {
            throw InvalidConfig("dense engine supports L <= " + std::to_string(kMaxOperatorSites));
        }
        if (engine == Engine::Loop && loop_mode == KnitMode::Pooled) {
            const int t = effective_T(*this, l);
            if (!is_pow2(l) || !is_pow2(t) || t < 2) {
                throw InvalidConfig("pooled loop sampling needs power-of-two L and T >= 2");
            }
        }
    }
    if (engine == Engine::Stabilizer && c != 1.0) {
        throw InvalidConfig("stabilizer engine requires c = 1");
    }
    if (pool_size < 1) {
        throw InvalidConfig("pool_size must be positive");
    }
}

std::string SweepConfig::to_json(int indent) const {
    json j;
    j["engine"] = engine_name(engine);
    j["L"] = L;
    j["T"] = T;
    j["p"] = p;
    j["q"] = q;
    j["r"] = r;
    j["c"] = c;
    j["samples"] = samples;
    j["master_seed"] = master_seed;
    j["loop"] = {{"mode", loop_mode == KnitMode::Pooled ? "pooled" : "independent"}, {"pool_size", pool_size}};
    j["output"] = output;
    return j.dump(indent);
}

SweepConfig SweepConfig::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.is_object()) {
        throw InvalidConfig("sweep config must be a JSON object");
    }
    SweepConfig cfg;
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "engine") {
                cfg.engine = parse_engine(value.get<std::string>());
            } else if (key == "L") {
                cfg.L = scalar_or_array<int>(j, "L");
            } else if (key == "p") {
                cfg.p = scalar_or_array<double>(j, "p");
            } else if (key == "q") {
                cfg.q = scalar_or_array<double>(j, "q");
            } else if (key == "r") {
                cfg.r = scalar_or_array<double>(j, "r");
            } else if (key == "T") {
                cfg.T = value.get<int>();
            } else if (key == "c") {
                cfg.c = value.get<double>();
            } else if (key == "samples") {
                cfg.samples = value.get<std::size_t>();
            } else if (key == "master_seed") {
                cfg.master_seed = value.get<std::uint64_t>();
            } else if (key == "loop") {
                if (value.contains("mode")) {
                    const auto mode = value.at("mode").get<std::string>();
                    if (mode == "pooled") {
                        cfg.loop_mode = KnitMode::Pooled;
                    } else if (mode == "independent") {
                        cfg.loop_mode = KnitMode::Independent;
                    } else {
                        throw InvalidConfig("loop.mode must be 'pooled' or 'independent'");
                    }
                }
                if (value.contains("pool_size")) {
                    cfg.pool_size = value.at("pool_size").get<std::size_t>();
                }
            } else if (key == "output") {
                cfg.output = value.get<std::string>();
            } else {
                throw InvalidConfig("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception &e) {
        throw InvalidConfig(std::string("bad config field: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::vector<GridPoint> expand_grid(const SweepConfig &cfg) {
    std::vector<GridPoint> grid;
    for (int l : cfg.L) {
        for (double p : cfg.p) {
            for (double q : cfg.q) {
                for (double r : cfg.r) {
                    grid.push_back({l, effective_T(cfg, l), p, q, r});
                }
            }
        }
    }
    return grid;
}

std::uint64_t sample_seed(std::uint64_t master, std::size_t point, std::size_t k) {
    return mix_key(master, static_cast<std::uint64_t>(point), static_cast<std::uint64_t>(k));
}

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("BRAIDCIRCUIT_WORKERS")) {
        int v = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc() && res.ptr == s.data() + s.size() && v > 0) {
            return v;
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<double> run_point(const SweepConfig &cfg, std::size_t point_index, const GridPoint &pt, int workers) {
    cfg.validate();
    std::vector<GridPoint> grid(point_index + 1);
    grid[point_index] = pt;
    std::vector<std::vector<double>> results(point_index + 1);
    results[point_index].assign(cfg.samples, 0.0);
    const auto items = items_for(cfg, point_index);
    std::vector<double> seconds(items.size());
    execute(cfg, grid, items, results, seconds, resolve_workers(workers));
    return std::move(results[point_index]);
}

ResultRecord summarize(const SweepConfig &cfg, const GridPoint &pt, const std::vector<double> &samples) {
    ResultRecord rec;
    rec.engine = cfg.engine;
    rec.L = pt.L;
    rec.T = pt.T;
    rec.c = cfg.c;
    rec.p = pt.p;
    rec.q = pt.q;
    rec.r = pt.r;
    rec.q_prime = q_prime(pt.p, pt.q);
    rec.master_seed = cfg.master_seed;
    double sum = 0.0;
    for (double s : samples) {
        if (std::isnan(s)) {
            ++rec.discarded;
        } else {
            ++rec.samples;
            sum += s;
        }
    }
    if (rec.samples == 0) {
        rec.mean_S = std::numeric_limits<double>::quiet_NaN();
        rec.stderr_S = std::numeric_limits<double>::quiet_NaN();
        return rec;
    }
    rec.mean_S = sum / static_cast<double>(rec.samples);
    double ss = 0.0;
    for (double s : samples) {
        if (!std::isnan(s)) {
            ss += (s - rec.mean_S) * (s - rec.mean_S);
        }
    }
    const auto n = static_cast<double>(rec.samples);
    rec.stderr_S = rec.samples > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return rec;
}

std::vector<ResultRecord> run_sweep(const SweepConfig &cfg, int workers) {
    cfg.validate();
    const auto grid = expand_grid(cfg);
    std::vector<std::vector<double>> results(grid.size());
    std::vector<WorkItem> items;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        results[i].assign(cfg.samples, 0.0);
        auto more = items_for(cfg, i);
        items.insert(items.end(), more.begin(), more.end());
    }
    std::vector<double> seconds(items.size(), 0.0);
    execute(cfg, grid, items, results, seconds, resolve_workers(workers));

    std::vector<ResultRecord> records;
    records.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        records.push_back(summarize(cfg, grid[i], results[i]));
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
        records[items[k].point].wall_seconds += seconds[k];
    }
    return records;
}

std::string records_to_csv(const std::vector<ResultRecord> &records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &r : records) {
        out += engine_name(r.engine);
        for (const std::string &field :
             {std::to_string(r.L), std::to_string(r.T), fmt_double(r.c), fmt_double(r.p), fmt_double(r.q),
              fmt_double(r.r), fmt_double(r.q_prime), std::to_string(r.samples), std::to_string(r.discarded),
              fmt_double(r.mean_S), fmt_double(r.stderr_S), std::to_string(r.master_seed)}) {
            out += ',';
            out += field;
        }
        out += '\n';
    }
    return out;
}

std::filesystem::path manifest_path(const std::filesystem::path &csv) {
    auto m = csv;
    m.replace_extension(".manifest.json");
    return m;
}

namespace {

void write_file(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    f << content;
    f.close();
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

WriteSummary aggregate_write(const std::vector<ResultRecord> &records, const SweepConfig &cfg,
                             const std::filesystem::path &csv) {
    if (records.empty()) {
        throw InvalidConfig("no records to write");
    }
    WriteSummary summary;
    summary.csv = csv;
    summary.manifest = manifest_path(csv);
    summary.rows = records.size();
    write_file(csv, records_to_csv(records));

    json m;
    m["tool"] = "braidcircuit";
    m["version"] = kToolVersion;
    m["config"] = json::parse(cfg.to_json());
    m["csv"] = csv.filename().string();
    m["rows"] = records.size();
    write_file(summary.manifest, m.dump(2) + "\n");
    return summary;
}

SweepConfig load_manifest(const std::filesystem::path &path) {
    const std::string text = read_file(path);
    json m;
    try {
        m = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!m.is_object() || !m.contains("config")) {
        throw InvalidConfig("manifest has no config");
    }
    return SweepConfig::from_json(m.at("config").dump());
}

SweepConfig load_config(const std::filesystem::path &path) {
    return SweepConfig::from_json(read_file(path));
}

}  // namespace braidcircuit
