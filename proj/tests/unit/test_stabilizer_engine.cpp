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
#include <string>
#include <vector>

#include "braidcircuit/dense_engine.hpp"
#include "braidcircuit/errors.hpp"
#include "braidcircuit/stabilizer_engine.hpp"

namespace braidcircuit {
namespace {

TEST(Stabilizer, TfdsGenerators) {
    const auto t = PhaseFreeTableau::tfds(2);
    EXPECT_EQ(t.num_qubits(), 4);
    EXPECT_TRUE(t.is_valid());
    std::vector<std::string> rows;
    for (int i = 0; i < 4; ++i) {
        rows.push_back(t.row_string(i));
    }
    std::sort(rows.begin(), rows.end());
    EXPECT_EQ(rows, (std::vector<std::string>{"IXIX", "IZIZ", "XIXI", "ZIZI"}));
}

TEST(Stabilizer, FreshTfdsIsMaximallyEntangled) {
    for (int L : {2, 8, 64, 100}) {
        EXPECT_EQ(PhaseFreeTableau::tfds(L).entanglement_prefix(L), L);
    }
}

TEST(Stabilizer, SingleMeasurementRemovesTwoBits) {
    auto t = PhaseFreeTableau::tfds(4);
    t.measure_bell(0, 1);
    EXPECT_TRUE(t.is_valid());
    EXPECT_EQ(t.entanglement_prefix(4), 2);
    EXPECT_EQ(stabilizer_entropy(uniform_layout(2, 1, GateKind::P)), 0);
}

TEST(Stabilizer, FromStringsIgnoresSign) {
    const std::vector<std::string> rows{"-XX", "+ZZ"};
    const auto t = PhaseFreeTableau::from_strings(rows);
    EXPECT_EQ(t.row_string(0), "XX");
    EXPECT_EQ(t.row_string(1), "ZZ");
    EXPECT_TRUE(t.x(0, 1));
    EXPECT_FALSE(t.z(0, 1));
    EXPECT_TRUE(t.is_valid());
    const std::vector<int> a{0};
    EXPECT_EQ(t.entanglement(a), 1);
}

TEST(Stabilizer, CommutationIsChecked) {
    const std::vector<std::string> rows{"XI", "ZI"};
    EXPECT_FALSE(PhaseFreeTableau::from_strings(rows).is_valid());
}

TEST(Stabilizer, SwapExchangesColumns) {
    const std::vector<std::string> rows{"XZI", "ZXI", "IIZ"};
    auto t = PhaseFreeTableau::from_strings(rows);
    t.apply_swap(0, 2);
    EXPECT_EQ(t.row_string(0), "IZX");
    EXPECT_EQ(t.row_string(2), "ZII");
}

TEST(Stabilizer, RMapPreservesValidity) {
    const auto map = clifford_conjugation(CliffordGate::RAtC1);
    auto t = PhaseFreeTableau::tfds(6);
    for (int k = 0; k < 40; ++k) {
        const int a = (3 * k) % 12;
        t.apply_two_qubit(map, a, (a + 1) % 12);
        ASSERT_TRUE(t.is_valid());
    }
}

TEST(Stabilizer, RegionAndComplementAgree) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto t = PhaseFreeTableau::tfds(8);
        t.apply_layout(sample_layout(8, 8, 0.6, 0.5, 0.2, seed));
        const std::vector<int> a{0, 3, 9, 12, 15};
        const std::vector<int> b{1, 2, 4, 5, 6, 7, 8, 10, 11, 13, 14};
        EXPECT_EQ(t.entanglement(a), t.entanglement(b));
        EXPECT_TRUE(t.is_valid());
    }
}

TEST(Stabilizer, RejectsNonCliffordCoupling) {
    EXPECT_THROW(stabilizer_entropy(sample_layout(4, 4, 0.5, 0.5, 0.0, 1, 0.5)), UnsupportedParameter);
}

TEST(Stabilizer, GfTwoRank) {
    EXPECT_EQ(gf2_rank({0b011, 0b110, 0b101}, 1), 2);
    EXPECT_EQ(gf2_rank({0b001, 0b010, 0b100}, 1), 3);
    EXPECT_EQ(gf2_rank({}, 1), 0);
}

TEST(Stabilizer, AgreesWithDenseEngine) {
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const double r = (seed % 3) * 0.3;
        const auto l = sample_layout(6, 6, 0.5, 0.5, r, 7000 + seed);
        double dense = 0;
        try {
            dense = evolve_tfds_entropy(l);
        } catch (const ZeroNormTrajectory &) {
            continue;
        }
        EXPECT_NEAR(dense, stabilizer_entropy(l), 1e-8) << "seed " << seed;
        ++compared;
    }
    EXPECT_GT(compared, 140);
}

TEST(Stabilizer, LargeSystemsStayValid) {
    auto t = PhaseFreeTableau::tfds(128);
    t.apply_layout(sample_layout(128, 128, 0.5, 0.5, 0.1, 3));
    EXPECT_TRUE(t.is_valid());
    const int s = t.entanglement_prefix(128);
    EXPECT_GE(s, 0);
    EXPECT_LE(s, 128);
}

}  // namespace
}  // namespace braidcircuit
