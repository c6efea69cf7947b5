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

#include "braidcircuit/circuit_layout.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "braidcircuit/errors.hpp"
#include "braidcircuit/random.hpp"
#include "json.hpp"

namespace braidcircuit {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_probability(double v, const char *name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidParameter(std::string("probability ") + name + " must lie in [0, 1]");
    }
}

GateKind kind_from_code(const std::string &code, std::size_t offset) {
    if (code == "R") {
        return GateKind::R;
    }
    if (code == "S") {
        return GateKind::SWAP;
    }
    if (code == "P") {
        return GateKind::P;
    }
    if (code == "I") {
        return GateKind::I;
    }
    throw ParseError("unknown gate code \"" + code + "\"", offset);
}

template <typename T>
T field(const ordered_json &j, const char *name, std::size_t len) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"", len);
    }
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("field \"") + name + "\" has the wrong type: " + e.what(), len);
    }
}

}  // namespace

char gate_code(GateKind kind) {
    switch (kind) {
        case GateKind::R:
            return 'R';
        case GateKind::SWAP:
            return 'S';
        case GateKind::P:
            return 'P';
        case GateKind::I:
            return 'I';
    }
    return '?';
}

void GateProbabilities::validate() const {
    check_probability(p, "p");
    check_probability(q, "q");
    check_probability(r, "r");
}

std::size_t CircuitLayout::count(GateKind kind) const {
    return static_cast<std::size_t>(std::count(gates.begin(), gates.end(), kind));
}

void CircuitLayout::validate() const {
    if (L < 2 || L % 2 != 0) {
        throw InvalidParameter("L must be even and at least 2");
    }
    if (T < 1) {
        throw InvalidParameter("T must be at least 1");
    }
    if (!std::isfinite(c)) {
        throw InvalidParameter("c must be finite");
    }
    probs.validate();
    if (gates.size() != static_cast<std::size_t>(T) * (L / 2)) {
        throw InvalidParameter("gate count does not match T * L/2");
    }
}

GateKind draw_slot(const GateProbabilities &probs, std::uint64_t seed, int layer, int bond) {
    const std::uint64_t key = mix_key(seed, static_cast<std::uint64_t>(layer), static_cast<std::uint64_t>(bond));
    const double u0 = to_unit(key);
    const double u1 = to_unit(mix64(key));
    if (u0 < probs.p) {
        return u1 < probs.r ? GateKind::SWAP : GateKind::R;
    }
    return u1 < probs.measurement_probability(layer) ? GateKind::P : GateKind::I;
}

CircuitLayout sample_layout(int L, int T, double p, double q, double r, std::uint64_t seed, double c) {
    CircuitLayout layout;
    layout.L = L;
    layout.T = T;
    layout.c = c;
    layout.probs = {p, q, r};
    layout.seed = seed;
    if (L < 2 || L % 2 != 0) {
        throw InvalidParameter("L must be even and at least 2");
    }
    if (T < 1) {
        throw InvalidParameter("T must be at least 1");
    }
    layout.probs.validate();
    layout.gates.resize(static_cast<std::size_t>(T) * (L / 2));
    for (int t = 0; t < T; ++t) {
        for (int j = 0; j < L / 2; ++j) {
            layout.at(t, j) = draw_slot(layout.probs, seed, t, j);
        }
    }
    return layout;
}

CircuitLayout uniform_layout(int L, int T, GateKind kind, double c) {
    CircuitLayout layout;
    layout.L = L;
    layout.T = T;
    layout.c = c;
    layout.probs = {kind == GateKind::R || kind == GateKind::SWAP ? 1.0 : 0.0, kind == GateKind::P ? 1.0 : 0.0,
                    kind == GateKind::SWAP ? 1.0 : 0.0};
    layout.gates.assign(static_cast<std::size_t>(T) * (L / 2), kind);
    layout.validate();
    return layout;
}

double q_prime(double p, double q) {
    return 0.5 + (q - 0.5) * (1.0 - p);
}

std::string layout_to_json(const CircuitLayout &layout) {
    ordered_json j;
    j["version"] = 1;
    j["L"] = layout.L;
    j["T"] = layout.T;
    j["c"] = layout.c;
    j["p"] = layout.probs.p;
    j["q"] = layout.probs.q;
    j["r"] = layout.probs.r;
    j["seed"] = layout.seed;
    ordered_json layers = ordered_json::array();
    for (int t = 0; t < layout.T; ++t) {
        ordered_json row = ordered_json::array();
        for (GateKind g : layout.layer(t)) {
            row.push_back(std::string(1, gate_code(g)));
        }
        layers.push_back(std::move(row));
    }
    j["layers"] = std::move(layers);
    return j.dump();
}

CircuitLayout layout_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("malformed layout JSON: ") + e.what(), e.byte);
    }
    const std::size_t len = text.size();
    if (!j.is_object()) {
        throw ParseError("layout must be a JSON object", 0);
    }
    if (field<int>(j, "version", len) != 1) {
        throw ParseError("unsupported layout version", len);
    }
    CircuitLayout layout;
    layout.L = field<int>(j, "L", len);
    layout.T = field<int>(j, "T", len);
    layout.c = field<double>(j, "c", len);
    layout.probs = {field<double>(j, "p", len), field<double>(j, "q", len), field<double>(j, "r", len)};
    const auto &seed = j.find("seed");
    if (seed == j.end() || !seed->is_number_unsigned()) {
        throw ParseError("field \"seed\" must be a non-negative integer", len);
    }
    layout.seed = seed->get<std::uint64_t>();
    if (layout.L < 2 || layout.L % 2 != 0 || layout.T < 1) {
        throw ParseError("L must be even and >= 2, T >= 1", len);
    }
    const auto layers = j.find("layers");
    if (layers == j.end() || !layers->is_array() || layers->size() != static_cast<std::size_t>(layout.T)) {
        throw ParseError("\"layers\" must be an array of T layers", len);
    }
    layout.gates.reserve(static_cast<std::size_t>(layout.T) * (layout.L / 2));
    for (const auto &row : *layers) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(layout.L / 2)) {
            throw ParseError("each layer must hold L/2 gate codes", len);
        }
        for (const auto &code : row) {
            if (!code.is_string()) {
                throw ParseError("gate codes must be strings", len);
            }
            layout.gates.push_back(kind_from_code(code.get<std::string>(), len));
        }
    }
    try {
        layout.validate();
    } catch (const InvalidParameter &e) {
        throw ParseError(e.what(), len);
    }
    return layout;
}

CircuitLayout roundtrip(const CircuitLayout &layout) {
    return layout_from_json(layout_to_json(layout));
}

void save_layout(const CircuitLayout &layout, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << layout_to_json(layout) << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

CircuitLayout load_layout(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return layout_from_json(buf.str());
}

}  // namespace braidcircuit
