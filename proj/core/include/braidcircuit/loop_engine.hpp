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
#include <span>
#include <vector>

#include "braidcircuit/circuit_layout.hpp"

namespace braidcircuit {

/// Worldline summary of a slab of the circuit with `width` sites.
///
/// Ports 0..width-1 sit on the bottom boundary and width..2*width-1 on the top.
/// `match` pairs every port with the other end of its worldline. Loops that close
/// inside the slab are only counted.
struct Stripe {
    int width = 0;
    int height = 0;
    std::vector<std::uint32_t> match;
    std::uint64_t closed_loops = 0;

    /// Length bookkeeping (one unit per gate tile a worldline passes through).
    bool track_lengths = false;
    std::vector<std::uint32_t> strand_lengths;  ///< per port; both ends of a strand agree
    std::vector<std::uint32_t> loop_lengths;    ///< one entry per closed loop

    /// Height-0 stripe: bottom i is joined to top i.
    static Stripe identity(int width, bool track_lengths = false);

    std::uint32_t top(int site) const {
        return static_cast<std::uint32_t>(width + site);
    }
    bool is_bottom(std::uint32_t port) const {
        return port < static_cast<std::uint32_t>(width);
    }
    /// match is an involution with no fixed points.
    bool is_perfect_matching() const;
};

/// Number of bottom ports whose worldline ends on the top boundary.
int spanning_number(const Stripe &s);

/// Height-1 stripe of one brickwall layer. `gates` has L/2 entries, bond j covers
/// sites (2j + offset, 2j + 1 + offset) mod L. R and SWAP are both plain crossings.
Stripe layer_stripe(std::span<const GateKind> gates, int L, int offset, bool track_lengths = false);

/// Glue lower's top boundary to upper's bottom boundary. Throws DimensionMismatch
/// on width mismatch. O(width).
Stripe concatenate(const Stripe &lower, const Stripe &upper);

/// In-place equivalent of s = concatenate(s, layer_stripe(gates, s.width, offset)).
void apply_layer(Stripe &s, std::span<const GateKind> gates, int offset);

/// Stripe of a whole layout, built layer by layer.
Stripe stripe_from_layout(const CircuitLayout &layout, bool track_lengths = false);

/// Loop topology of a layout on the periodic chain, with the number of times each
/// closed loop winds around the ring.
struct WindingSummary {
    int spanning = 0;
    std::uint64_t closed_loops = 0;
    /// Closed loops with non-zero winding number.
    std::uint64_t winding_loops = 0;
    /// Closed loops with odd winding number.
    std::uint64_t odd_winding_loops = 0;
};

WindingSummary winding_summary(const CircuitLayout &layout);

/// spanning - 1 when spanning > 0 and an odd-winding closed loop exists, else spanning.
/// An odd-winding loop encircles the spanning strands and fixes their joint parity,
/// removing one bit; on R/P/I layouts at c = 1 this matches the stabilizer
/// entanglement, while the bare spanning number overcounts.
int parity_corrected_spanning(const WindingSummary &w);

enum class KnitMode {
    /// Pools of stripes per height level, each level built from random pairs of
    /// the level below. Needs L and T powers of two.
    Pooled,
    /// Every sample built from freshly drawn layers; exactly independent.
    Independent,
};

struct KnitOptions {
    KnitMode mode = KnitMode::Pooled;
    std::size_t pool_size = 256;
    bool track_lengths = false;
};

/// `count` final stripes of height T. In independent mode sample k uses the
/// gates of sample_layout(L, T, p, q, r, mix_key(seed, k, 0)).
std::vector<Stripe> knit_samples(int L, int T, const GateProbabilities &probs, std::uint64_t seed,
                                 const KnitOptions &options, std::size_t count);

Stripe knit_sample(int L, int T, const GateProbabilities &probs, std::uint64_t seed, KnitMode mode);

/// Seed used for independent sample k of a knit_samples call.
std::uint64_t independent_sample_seed(std::uint64_t seed, std::size_t k);

}  // namespace braidcircuit
