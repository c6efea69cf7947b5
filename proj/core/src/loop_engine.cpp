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

#include "braidcircuit/loop_engine.hpp"

#include <bit>

#include "braidcircuit/errors.hpp"
#include "braidcircuit/random.hpp"

namespace braidcircuit {

namespace {

bool is_crossing(GateKind g) {
    return g == GateKind::R || g == GateKind::SWAP;
}

void link(Stripe &s, std::uint32_t a, std::uint32_t b) {
    s.match[a] = b;
    s.match[b] = a;
}

template <bool kTrack>
Stripe glue(const Stripe &lower, const Stripe &upper) {
    const auto w = static_cast<std::uint32_t>(lower.width);
    Stripe out;
    out.width = lower.width;
    out.height = lower.height + upper.height;
    out.match.assign(2 * w, UINT32_MAX);
    out.closed_loops = lower.closed_loops + upper.closed_loops;
    out.track_lengths = kTrack;
    if constexpr (kTrack) {
        out.strand_lengths.assign(2 * w, 0);
        out.loop_lengths = lower.loop_lengths;
        out.loop_lengths.insert(out.loop_lengths.end(), upper.loop_lengths.begin(), upper.loop_lengths.end());
    }
    std::vector<std::uint8_t> seen(w, 0);

    auto finish = [&](std::uint32_t a, std::uint32_t b, std::uint32_t len) {
        link(out, a, b);
        if constexpr (kTrack) {
            out.strand_lengths[a] = out.strand_lengths[b] = len;
        }
    };
    auto lower_len = [&](std::uint32_t port) -> std::uint32_t {
        if constexpr (kTrack) {
            return lower.strand_lengths[port];
        }
        return 0;
    };
    auto upper_len = [&](std::uint32_t port) -> std::uint32_t {
        if constexpr (kTrack) {
            return upper.strand_lengths[port];
        }
        return 0;
    };

    // Walks starting on the outer bottom boundary.
    for (std::uint32_t x = 0; x < w; ++x) {
        if (out.match[x] != UINT32_MAX) {
            continue;
        }
        std::uint32_t len = lower_len(x);
        std::uint32_t y = lower.match[x];
        std::uint32_t end;
        while (true) {
            if (y < w) {
                end = y;
                break;
            }
            const std::uint32_t g = y - w;
            seen[g] = 1;
            len += upper_len(g);
            const std::uint32_t z = upper.match[g];
            if (z >= w) {
                end = z;
                break;
            }
            seen[z] = 1;
            len += lower_len(w + z);
            y = lower.match[w + z];
        }
        finish(x, end, len);
    }
    // Walks between two outer top ports.
    for (std::uint32_t x = w; x < 2 * w; ++x) {
        if (out.match[x] != UINT32_MAX) {
            continue;
        }
        std::uint32_t len = upper_len(x);
        std::uint32_t z = upper.match[x];
        while (z < w) {
            seen[z] = 1;
            len += lower_len(w + z);
            const std::uint32_t g = lower.match[w + z] - w;
            seen[g] = 1;
            len += upper_len(g);
            z = upper.match[g];
        }
        finish(x, z, len);
    }
    // Whatever is left on the seam closes into loops.
    for (std::uint32_t g0 = 0; g0 < w; ++g0) {
        if (seen[g0]) {
            continue;
        }
        std::uint32_t len = 0;
        std::uint32_t g = g0;
        do {
            seen[g] = 1;
            const std::uint32_t z = upper.match[g];
            len += upper_len(g);
            seen[z] = 1;
            len += lower_len(w + z);
            g = lower.match[w + z] - w;
        } while (g != g0);
        ++out.closed_loops;
        if constexpr (kTrack) {
            out.loop_lengths.push_back(len);
        }
    }
    return out;
}

}  // namespace

Stripe Stripe::identity(int width, bool track_lengths) {
    Stripe s;
    s.width = width;
    s.height = 0;
    s.match.resize(2 * static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        link(s, static_cast<std::uint32_t>(i), s.top(i));
    }
    s.track_lengths = track_lengths;
    if (track_lengths) {
        s.strand_lengths.assign(2 * static_cast<std::size_t>(width), 0);
    }
    return s;
}

bool Stripe::is_perfect_matching() const {
    const auto n = static_cast<std::uint32_t>(match.size());
    if (n != 2 * static_cast<std::uint32_t>(width)) {
        return false;
    }
    for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t y = match[x];
        if (y >= n || y == x || match[y] != x) {
            return false;
        }
    }
    return true;
}

int spanning_number(const Stripe &s) {
    int count = 0;
    const auto w = static_cast<std::uint32_t>(s.width);
    for (std::uint32_t x = 0; x < w; ++x) {
        count += s.match[x] >= w;
    }
    return count;
}

Stripe layer_stripe(std::span<const GateKind> gates, int L, int offset, bool track_lengths) {
    if (L < 2 || L % 2 != 0 || gates.size() != static_cast<std::size_t>(L / 2)) {
        throw DimensionMismatch("layer_stripe: need L/2 gates for even L");
    }
    Stripe s;
    s.width = L;
    s.height = 1;
    s.match.resize(2 * static_cast<std::size_t>(L));
    s.track_lengths = track_lengths;
    if (track_lengths) {
        s.strand_lengths.assign(2 * static_cast<std::size_t>(L), 1);
    }
    for (int j = 0; j < L / 2; ++j) {
        const auto a = static_cast<std::uint32_t>((2 * j + offset) % L);
        const auto b = static_cast<std::uint32_t>((2 * j + 1 + offset) % L);
        switch (gates[j]) {
            case GateKind::I:
                link(s, a, s.top(static_cast<int>(a)));
                link(s, b, s.top(static_cast<int>(b)));
                break;
            case GateKind::P:
                link(s, a, b);
                link(s, s.top(static_cast<int>(a)), s.top(static_cast<int>(b)));
                break;
            case GateKind::R:
            case GateKind::SWAP:
                link(s, a, s.top(static_cast<int>(b)));
                link(s, b, s.top(static_cast<int>(a)));
                break;
        }
    }
    return s;
}

Stripe concatenate(const Stripe &lower, const Stripe &upper) {
    if (lower.width != upper.width) {
        throw DimensionMismatch("concatenate: stripe widths differ");
    }
    if (lower.track_lengths && upper.track_lengths) {
        return glue<true>(lower, upper);
    }
    return glue<false>(lower, upper);
}

void apply_layer(Stripe &s, std::span<const GateKind> gates, int offset) {
    const int L = s.width;
    if (gates.size() != static_cast<std::size_t>(L / 2)) {
        throw DimensionMismatch("apply_layer: need L/2 gates");
    }
    auto &len = s.strand_lengths;
    auto grow = [&](std::uint32_t port) {
        ++len[port];
        ++len[s.match[port]];
    };
    for (int j = 0; j < L / 2; ++j) {
        const GateKind g = gates[j];
        if (g == GateKind::I && !s.track_lengths) {
            continue;
        }
        const std::uint32_t ta = s.top((2 * j + offset) % L);
        const std::uint32_t tb = s.top((2 * j + 1 + offset) % L);
        const std::uint32_t x = s.match[ta];
        const std::uint32_t y = s.match[tb];
        if (g == GateKind::P) {
            if (x == tb) {
                ++s.closed_loops;
                if (s.track_lengths) {
                    s.loop_lengths.push_back(len[ta] + 1);
                }
            } else {
                link(s, x, y);
                if (s.track_lengths) {
                    len[x] = len[y] = len[ta] + len[tb] + 1;
                }
            }
            link(s, ta, tb);
            if (s.track_lengths) {
                len[ta] = len[tb] = 1;
            }
            continue;
        }
        if (s.track_lengths) {
            grow(ta);
            grow(tb);
        }
        if (is_crossing(g) && x != tb) {
            link(s, ta, y);
            link(s, tb, x);
            if (s.track_lengths) {
                std::swap(len[ta], len[tb]);
            }
        }
    }
    ++s.height;
}

Stripe stripe_from_layout(const CircuitLayout &layout, bool track_lengths) {
    layout.validate();
    Stripe s = Stripe::identity(layout.L, track_lengths);
    for (int t = 0; t < layout.T; ++t) {
        apply_layer(s, layout.layer(t), layout.offset(t));
    }
    return s;
}

WindingSummary winding_summary(const CircuitLayout &layout) {
    layout.validate();
    const int L = layout.L;
    // disp[v] = unwrapped horizontal displacement walking from match[v] to v.
    std::vector<std::uint32_t> m(2 * static_cast<std::size_t>(L));
    std::vector<std::int64_t> disp(m.size(), 0);
    for (int i = 0; i < L; ++i) {
        m[i] = static_cast<std::uint32_t>(L + i);
        m[L + i] = static_cast<std::uint32_t>(i);
    }
    auto join = [&](std::uint32_t from, std::uint32_t to, std::int64_t d) {
        m[from] = to;
        m[to] = from;
        disp[to] = d;
        disp[from] = -d;
    };
    WindingSummary w;
    for (int t = 0; t < layout.T; ++t) {
        for (int j = 0; j < layout.bonds_per_layer(); ++j) {
            const GateKind g = layout.at(t, j);
            if (g == GateKind::I) {
                continue;
            }
            // Bond (a, a+1 mod L): stepping from a to b is a displacement of +1.
            const auto [a, b] = layout.bond(t, j);
            const auto ta = static_cast<std::uint32_t>(L + a);
            const auto tb = static_cast<std::uint32_t>(L + b);
            const std::uint32_t x = m[ta];
            const std::uint32_t y = m[tb];
            if (g == GateKind::P) {
                if (x == tb) {
                    const std::int64_t total = disp[tb] - 1;
                    const std::int64_t winding = total / L;
                    ++w.closed_loops;
                    w.winding_loops += winding != 0;
                    w.odd_winding_loops += (winding % 2) != 0;
                } else {
                    join(x, y, disp[ta] + 1 - disp[tb]);
                }
                join(ta, tb, 1);
            } else if (x == tb) {
                join(ta, tb, disp[ta] + 2);
            } else {
                const std::int64_t dx = disp[ta] + 1;
                const std::int64_t dy = disp[tb] - 1;
                join(x, tb, dx);
                join(y, ta, dy);
            }
        }
    }
    for (int i = 0; i < L; ++i) {
        w.spanning += m[i] >= static_cast<std::uint32_t>(L);
    }
    return w;
}

int parity_corrected_spanning(const WindingSummary &w) {
    return w.spanning - ((w.spanning > 0 && w.odd_winding_loops > 0) ? 1 : 0);
}

std::uint64_t independent_sample_seed(std::uint64_t seed, std::size_t k) {
    return mix_key(seed, static_cast<std::uint64_t>(k), 0);
}

namespace {

void check_shape(int L, int T) {
    if (L < 2 || L % 2 != 0) {
        throw InvalidParameter("L must be even and at least 2");
    }
    if (T < 1) {
        throw InvalidParameter("T must be at least 1");
    }
}

Stripe independent_stripe(int L, int T, const GateProbabilities &probs, std::uint64_t seed, bool track) {
    Stripe s = Stripe::identity(L, track);
    std::vector<GateKind> row(static_cast<std::size_t>(L / 2));
    for (int t = 0; t < T; ++t) {
        for (int j = 0; j < L / 2; ++j) {
            row[j] = draw_slot(probs, seed, t, j);
        }
        apply_layer(s, row, t % 2);
    }
    return s;
}

/// One round of pooled knitting: `pool` final stripes of height T.
std::vector<Stripe> pooled_round(int L, int T, const GateProbabilities &probs, std::uint64_t seed,
                                 std::size_t pool, bool track) {
    SplitMix64 rng(mix_key(seed, 0x9001, 0));
    std::vector<Stripe> level;
    level.reserve(pool);
    std::vector<GateKind> row(static_cast<std::size_t>(L / 2));
    for (std::size_t k = 0; k < pool; ++k) {
        const std::uint64_t leaf_seed = mix_key(seed, 0x1eaf, k);
        Stripe s = Stripe::identity(L, track);
        for (int t = 0; t < 2; ++t) {
            for (int j = 0; j < L / 2; ++j) {
                row[j] = draw_slot(probs, leaf_seed, t, j);
            }
            apply_layer(s, row, t);
        }
        level.push_back(std::move(s));
    }
    for (int height = 2; height < T; height *= 2) {
        std::vector<Stripe> next;
        next.reserve(pool);
        for (std::size_t k = 0; k < pool; ++k) {
            const std::size_t lo = rng.below(pool);
            const std::size_t up = rng.below(pool);
            next.push_back(concatenate(level[lo], level[up]));
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

std::vector<Stripe> knit_samples(int L, int T, const GateProbabilities &probs, std::uint64_t seed,
                                 const KnitOptions &options, std::size_t count) {
    check_shape(L, T);
    probs.validate();
    std::vector<Stripe> out;
    out.reserve(count);
    if (options.mode == KnitMode::Independent) {
        for (std::size_t k = 0; k < count; ++k) {
            out.push_back(independent_stripe(L, T, probs, independent_sample_seed(seed, k), options.track_lengths));
        }
        return out;
    }
    if (!std::has_single_bit(static_cast<unsigned>(L)) || !std::has_single_bit(static_cast<unsigned>(T)) || T < 2) {
        throw InvalidParameter("pooled knitting needs L and T to be powers of two with T >= 2");
    }
    if (options.pool_size == 0) {
        throw InvalidParameter("pool size must be positive");
    }
    for (std::uint64_t round = 0; out.size() < count; ++round) {
        auto batch = pooled_round(L, T, probs, mix_key(seed, round, 0x600d), options.pool_size, options.track_lengths);
        for (auto &s : batch) {
            if (out.size() == count) {
                break;
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

Stripe knit_sample(int L, int T, const GateProbabilities &probs, std::uint64_t seed, KnitMode mode) {
    KnitOptions options;
    options.mode = mode;
    return knit_samples(L, T, probs, seed, options, 1).front();
}

}  // namespace braidcircuit
