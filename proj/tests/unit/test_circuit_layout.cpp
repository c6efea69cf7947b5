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

#include "braidcircuit/circuit_layout.hpp"
#include "braidcircuit/errors.hpp"
#include "braidcircuit/random.hpp"

namespace braidcircuit {
namespace {

TEST(CircuitLayout, BondConvention) {
    const auto l = uniform_layout(6, 2, GateKind::I);
    EXPECT_EQ(l.bond(0, 0), std::make_pair(0, 1));
    EXPECT_EQ(l.bond(0, 2), std::make_pair(4, 5));
    EXPECT_EQ(l.bond(1, 0), std::make_pair(1, 2));
    EXPECT_EQ(l.bond(1, 2), std::make_pair(5, 0));
    EXPECT_EQ(l.offset(0), 0);
    EXPECT_EQ(l.offset(1), 1);
}

TEST(CircuitLayout, AllUnitaryWhenPIsOne) {
    const auto l = sample_layout(16, 16, 1.0, 0.3, 0.0, 5);
    EXPECT_EQ(l.count(GateKind::R), l.gates.size());
}

TEST(CircuitLayout, StaggeredMeasurementsWhenQIsZero) {
    const auto l = sample_layout(8, 6, 0.0, 0.0, 0.0, 9);
    for (int t = 0; t < l.T; ++t) {
        for (GateKind g : l.layer(t)) {
            EXPECT_EQ(g, t % 2 == 0 ? GateKind::I : GateKind::P) << t;
        }
    }
}

TEST(CircuitLayout, SlotFrequencies) {
    // 10^5 slots; each category within 3 binomial standard deviations.
    const auto l = sample_layout(100, 2000, 0.5, 0.5, 0.1, 2024);
    const double n = static_cast<double>(l.gates.size());
    ASSERT_EQ(n, 1e5);
    const std::pair<GateKind, double> expected[] = {
        {GateKind::R, 0.45}, {GateKind::SWAP, 0.05}, {GateKind::P, 0.25}, {GateKind::I, 0.25}};
    for (const auto &[kind, prob] : expected) {
        const double sigma = std::sqrt(n * prob * (1 - prob));
        EXPECT_NEAR(static_cast<double>(l.count(kind)), n * prob, 3 * sigma) << gate_code(kind);
    }
}

TEST(CircuitLayout, MeasurementIdentitySymmetry) {
    // Layer t at q is distributed like layer t+1 at 1-q.
    const int L = 16;
    double p_even_q = 0;
    double p_odd_flip = 0;
    const int samples = 10000;
    for (int k = 0; k < samples; ++k) {
        const auto a = sample_layout(L, 2, 0.3, 0.2, 0.0, mix_key(1, k, 0));
        const auto b = sample_layout(L, 2, 0.3, 0.8, 0.0, mix_key(2, k, 0));
        for (int j = 0; j < L / 2; ++j) {
            p_even_q += a.at(0, j) == GateKind::P;
            p_odd_flip += b.at(1, j) == GateKind::P;
        }
    }
    const double n = samples * (L / 2);
    const double prob = 0.7 * 0.2;
    const double sigma = std::sqrt(n * prob * (1 - prob));
    EXPECT_NEAR(p_even_q, n * prob, 3 * sigma);
    EXPECT_NEAR(p_odd_flip, n * prob, 3 * sigma);
    EXPECT_NEAR(p_even_q, p_odd_flip, 5 * sigma);
}

TEST(CircuitLayout, CategoryProbabilitiesSumToOne) {
    for (double p : {0.0, 0.3, 1.0}) {
        for (double q : {0.0, 0.4, 1.0}) {
            for (int layer : {0, 1}) {
                const GateProbabilities probs{p, q, 0.2};
                const double total = p * 0.8 + p * 0.2 + (1 - p) * probs.measurement_probability(layer) +
                                     (1 - p) * (1 - probs.measurement_probability(layer));
                EXPECT_NEAR(total, 1.0, 1e-15);
            }
        }
    }
}

TEST(CircuitLayout, Determinism) {
    const auto a = sample_layout(32, 32, 0.5, 0.5, 0.1, 77);
    const auto b = sample_layout(32, 32, 0.5, 0.5, 0.1, 77);
    const auto c = sample_layout(32, 32, 0.5, 0.5, 0.1, 78);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.gates, c.gates);
    // Slot draws are a pure function of (seed, layer, bond).
    EXPECT_EQ(a.at(3, 5), draw_slot(a.probs, 77, 3, 5));
}

TEST(CircuitLayout, FrozenDraws) {
    // Guards the counter-based generator against accidental changes.
    EXPECT_EQ(mix64(0), 0xE220A8397B1DCDAFULL);
    const auto l = sample_layout(4, 2, 0.5, 0.5, 0.5, 1);
    std::string codes;
    for (GateKind g : l.gates) {
        codes += gate_code(g);
    }
    EXPECT_EQ(codes, "IRRS");
}

TEST(CircuitLayout, RejectsBadArguments) {
    EXPECT_THROW(sample_layout(5, 4, 0.5, 0.5, 0, 0), InvalidParameter);
    EXPECT_THROW(sample_layout(4, 0, 0.5, 0.5, 0, 0), InvalidParameter);
    EXPECT_THROW(sample_layout(4, 4, 1.5, 0.5, 0, 0), InvalidParameter);
    EXPECT_THROW(sample_layout(4, 4, 0.5, -0.1, 0, 0), InvalidParameter);
    EXPECT_THROW(sample_layout(4, 4, 0.5, 0.5, 2, 0), InvalidParameter);
}

TEST(CircuitLayout, QPrime) {
    EXPECT_NEAR(q_prime(0.5, 0.9), 0.7, 1e-15);
    for (double q : {0.0, 0.2, 0.9}) {
        EXPECT_EQ(q_prime(1.0, q), 0.5);
        EXPECT_NEAR(q_prime(0.0, q), q, 1e-15);
    }
}

TEST(CircuitLayout, Roundtrip) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto l = sample_layout(12, 7, 0.6, 0.3, 0.25, seed, 0.37);
        EXPECT_EQ(roundtrip(l), l);
    }
}

TEST(CircuitLayout, CanonicalJson) {
    const auto l = uniform_layout(2, 1, GateKind::P);
    EXPECT_EQ(layout_to_json(l),
              R"({"version":1,"L":2,"T":1,"c":1.0,"p":0.0,"q":1.0,"r":0.0,"seed":0,"layers":[["P"]]})");
}

TEST(CircuitLayout, TruncatedInputGivesByteOffset) {
    const std::string text = layout_to_json(sample_layout(4, 2, 0.5, 0.5, 0.0, 3));
    const std::string cut = text.substr(0, 40);
    try {
        layout_from_json(cut);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_LE(e.byte_offset(), cut.size() + 1);
        EXPECT_GT(e.byte_offset(), 0U);
    }
}

TEST(CircuitLayout, RejectsUnknownGateCode) {
    const std::string bad = R"({"version":1,"L":2,"T":1,"c":1.0,"p":0.0,"q":1.0,"r":0.0,"seed":0,"layers":[["X"]]})";
    EXPECT_THROW(layout_from_json(bad), ParseError);
    const std::string ragged = R"({"version":1,"L":4,"T":1,"c":1.0,"p":0.0,"q":1.0,"r":0.0,"seed":0,"layers":[["P"]]})";
    EXPECT_THROW(layout_from_json(ragged), ParseError);
}

TEST(CircuitLayout, SaveAndLoad) {
    const auto path = std::filesystem::temp_directory_path() / "braidcircuit_layout_test.json";
    const auto l = sample_layout(8, 8, 0.5, 0.5, 0.1, 12);
    save_layout(l, path);
    EXPECT_EQ(load_layout(path), l);
    std::filesystem::remove(path);
    EXPECT_THROW(load_layout(path), IoError);
}

}  // namespace
}  // namespace braidcircuit
