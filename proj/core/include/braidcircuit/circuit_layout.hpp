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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcircuit {

/// Content of one bond slot of the brickwall.
enum class GateKind : std::uint8_t { R, SWAP, P, I };

/// Single-letter file code: R, S, P, I.
char gate_code(GateKind kind);

/// Probabilities (p, q, r) of the staggered ensemble.
///
/// A slot is unitary with probability p; a unitary slot is SWAP with probability r
/// and R otherwise. A non-unitary slot is P with probability q on layers 0, 2, 4, ...
/// and with probability 1 - q on layers 1, 3, 5, ...; I otherwise.
struct GateProbabilities {
    double p = 0.5;
    double q = 0.5;
    double r = 0.0;

    /// Throws InvalidParameter when any value is outside [0, 1].
    void validate() const;
    double measurement_probability(int layer) const {
        return layer % 2 == 0 ? q : 1.0 - q;
    }

    bool operator==(const GateProbabilities &) const = default;
};

/// A sampled brickwall realization on a periodic chain of L sites (0-based).
///
/// Layer t acts on bonds (2j + t % 2, 2j + 1 + t % 2) mod L for j = 0 .. L/2 - 1; the
/// first layer therefore covers (0,1), (2,3), ... and the second (1,2), ..., (L-1,0).
struct CircuitLayout {
    int L = 2;
    int T = 1;
    double c = 1.0;
    GateProbabilities probs;
    std::uint64_t seed = 0;
    /// Layer-major, T * L/2 entries.
    std::vector<GateKind> gates;

    int bonds_per_layer() const {
        return L / 2;
    }
    int offset(int layer) const {
        return layer % 2;
    }
    /// Sites (first, second) of bond j in the given layer.
    std::pair<int, int> bond(int layer, int j) const {
        const int a = (2 * j + layer % 2) % L;
        return {a, (a + 1) % L};
    }
    GateKind at(int layer, int j) const {
        return gates[static_cast<std::size_t>(layer) * (L / 2) + j];
    }
    GateKind &at(int layer, int j) {
        return gates[static_cast<std::size_t>(layer) * (L / 2) + j];
    }
    std::span<const GateKind> layer(int t) const {
        return {gates.data() + static_cast<std::size_t>(t) * (L / 2), static_cast<std::size_t>(L / 2)};
    }
    std::size_t count(GateKind kind) const;
    /// Throws InvalidParameter on inconsistent shape or parameters.
    void validate() const;

    bool operator==(const CircuitLayout &) const = default;
};

/// Draw for one slot; a pure function of (probabilities, seed, layer, bond).
GateKind draw_slot(const GateProbabilities &probs, std::uint64_t seed, int layer, int bond);

/// Sample a layout. L must be even and >= 2, T >= 1, probabilities in [0, 1].
CircuitLayout sample_layout(int L, int T, double p, double q, double r, std::uint64_t seed, double c = 1.0);

/// Layout with every slot set to `kind`.
CircuitLayout uniform_layout(int L, int T, GateKind kind, double c = 1.0);

/// 1/2 + (q - 1/2)(1 - p).
double q_prime(double p, double q);

/// Canonical single-line JSON:
/// {"version":1,"L":..,"T":..,"c":..,"p":..,"q":..,"r":..,"seed":..,"layers":[["R","S",..],..]}
std::string layout_to_json(const CircuitLayout &layout);

/// Throws ParseError (with byte offset) on malformed input.
CircuitLayout layout_from_json(std::string_view text);

CircuitLayout roundtrip(const CircuitLayout &layout);

void save_layout(const CircuitLayout &layout, const std::filesystem::path &path);
CircuitLayout load_layout(const std::filesystem::path &path);

}  // namespace braidcircuit
