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
#include <numeric>
#include <vector>

#include "braidcircuit/dense_engine.hpp"
#include "braidcircuit/errors.hpp"
#include "braidcircuit/stabilizer_engine.hpp"
#include "oracles/oracles.hpp"

namespace braidcircuit {
namespace {

TEST(Dense, IdentityLayoutGivesIdentityOperator) {
    const Matrix u = circuit_operator(uniform_layout(6, 3, GateKind::I));
    EXPECT_LT(max_abs_diff(u, Matrix::Identity(64, 64)), 1e-15);
}

TEST(Dense, SingleGateMatchesGateMatrix) {
    for (double c : {-1.0, 0.3, 1.0}) {
        const Matrix u = circuit_operator(uniform_layout(2, 1, GateKind::R, c));
        EXPECT_LT(max_abs_diff(u, gate(GateType::R, c)), 1e-15);
    }
    const Matrix p = circuit_operator(uniform_layout(2, 1, GateKind::P));
    EXPECT_LT(max_abs_diff(p, gate(GateType::P)), 1e-15);
}

TEST(Dense, OperatorAndStateApplicationAgree) {
    const auto l = sample_layout(6, 5, 0.6, 0.4, 0.2, 11, 0.7);
    const Matrix u = circuit_operator(l);
    Vector v = Vector::Zero(64);
    for (int i = 0; i < 64; ++i) {
        v[i] = Complex(std::cos(i), std::sin(0.3 * i));
    }
    Vector w = v;
    apply_layout(w, l, 6);
    EXPECT_LT((u * v - w).norm(), 1e-12);
}

TEST(Dense, TwoSiteGateOnWrappedBond) {
    // Bond (L-1, 0) of odd layers.
    CircuitLayout l = uniform_layout(4, 2, GateKind::I);
    l.at(1, 1) = GateKind::SWAP;
    const Matrix u = circuit_operator(l);
    // |1000> (qubit 0 set, MSB first) goes to |0001>.
    EXPECT_NEAR(std::abs(u(1, 8)), 1.0, 1e-15);
}

TEST(Dense, TrajectoryAndTfdsAgree) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto l = sample_layout(6, 6, 0.6, 0.5, 0.1, seed, 0.4);
        double a = 0;
        try {
            a = trajectory_entropy(l);
        } catch (const ZeroNormTrajectory &) {
            continue;
        }
        EXPECT_NEAR(a, evolve_tfds_entropy(l), 1e-9);
    }
}

TEST(Dense, LargeOperatorSpectrumIsNormalized) {
    // Rank-deficient 256 x 256 operator on which divide-and-conquer SVD fails.
    const auto l = sample_layout(8, 8, 0.5, 0.5, 0.1, 346);
    const Matrix u = circuit_operator(l);
    const auto sv = singular_values(u / u.norm());
    double total = 0;
    for (double s : sv) {
        total += s * s;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(trajectory_entropy(l), stabilizer_entropy(l), 1e-8);
}

TEST(Dense, UnitaryCircuitIsMaximallyEntangled) {
    EXPECT_NEAR(trajectory_entropy(sample_layout(8, 8, 1.0, 0.5, 0.3, 4, 0.37)), 8.0, 1e-9);
}

TEST(Dense, ZeroNormTrajectoryDetected) {
    Matrix m = Matrix::Zero(4, 4);
    EXPECT_THROW(operator_entropy(m), ZeroNormTrajectory);
}

TEST(Dense, ResourceLimits) {
    EXPECT_THROW(circuit_operator(uniform_layout(kMaxOperatorSites + 2, 1, GateKind::I)), ResourceLimit);
    EXPECT_THROW(evolve_tfds(uniform_layout(kMaxTfdsSites + 1, 1, GateKind::I)), ResourceLimit);
}

TEST(Dense, PairingStates) {
    const auto tfds = PairingState::tfds(3);
    EXPECT_EQ(tfds.pairing, (std::vector<int>{3, 4, 5, 0, 1, 2}));
    const auto nn = PairingState::nearest_neighbour(4, 1);
    EXPECT_EQ(nn.pairing, (std::vector<int>{3, 2, 1, 0}));
    EXPECT_NEAR(nn.ket(true).norm(), 1.0, 1e-15);
    EXPECT_NEAR(nn.ket(false).squaredNorm(), 4.0, 1e-15);
    EXPECT_THROW((PairingState{{1, 1}}).validate(), InvalidParameter);
    EXPECT_NEAR(bipartite_entropy(tfds.ket(), 6, 3), 3.0, 1e-12);
}

TEST(Dense, LinkEntropiesMatchOracle) {
    for (const auto &o : oracle::kLinkOracle) {
        EXPECT_NEAR(link_entropy(LinkPiece::TwoR, o.c), o.two_r, 1e-9) << "c=" << o.c;
        EXPECT_NEAR(link_entropy(LinkPiece::SwapR, o.c), o.swap_r, 1e-9) << "c=" << o.c;
    }
}

TEST(Dense, LinkEntropiesAtCliffordPoints) {
    EXPECT_NEAR(link_entropy(LinkPiece::TwoR, 0.0), 0.0, 1e-9);
    EXPECT_NEAR(link_entropy(LinkPiece::TwoR, 1.0), 0.0, 1e-9);
    EXPECT_NEAR(link_entropy(LinkPiece::TwoR, -1.0), 0.0, 1e-9);
    EXPECT_NEAR(link_entropy(LinkPiece::SwapR, 1.0), 1.0, 1e-9);
    EXPECT_NEAR(link_entropy(LinkPiece::SwapR, -1.0), 1.0, 1e-9);
    EXPECT_NEAR(link_entropy(LinkPiece::SwapR, 0.0), 0.0, 1e-9);
}

TEST(Dense, HopfClosureMatchesOracle) {
    for (const auto &o : oracle::kHopfOracle) {
        const Complex v = hopf_closure(LinkPiece::TwoR, o.c);
        EXPECT_NEAR(v.real(), o.re, 1e-12) << "c=" << o.c;
        EXPECT_NEAR(v.imag(), o.im, 1e-12) << "c=" << o.c;
        EXPECT_NEAR(v.real(), 4.0 * (o.c * o.c - 1.0) / (1.0 + o.c * o.c), 1e-12);
    }
}

TEST(Dense, SwapDotClosureMatchesOracle) {
    for (const auto &o : oracle::kSwapDotOracle) {
        const Complex v = hopf_closure(LinkPiece::SwapR, o.c);
        EXPECT_NEAR(v.real(), o.re, 1e-12) << "c=" << o.c;
        EXPECT_NEAR(v.imag(), o.im, 1e-12) << "c=" << o.c;
        const auto rp = RParams::from(o.c);
        EXPECT_NEAR(v.real(), rp.g.real() * rp.n * rp.n, 1e-12);
    }
}

TEST(Dense, TopologicalInvariantOfUnlinkedPairs) {
    for (int L : {1, 2, 3}) {
        const auto psi = PairingState::tfds(L);
        const Complex v = topological_invariant(psi, psi.ket(true), 0, psi.num_qubits());
        EXPECT_NEAR(v.real(), std::pow(2.0, psi.num_qubits() / 2.0), 1e-12);
        EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
}

TEST(Dense, RenyiCountingInstance) {
    CircuitLayout l = uniform_layout(16, 6, GateKind::R, 1.0);
    const std::vector<int> region{0, 1, 2, 3, 4, 5};
    EXPECT_EQ(renyi2_counting(l, region, 1), 2);
    EXPECT_NEAR(renyi2_dense(l, region, 1), 2.0, 1e-9);
}

TEST(Dense, RenyiCountingOnRandomCrossingLayouts) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto l = sample_layout(10, 7, 1.0, 0.5, 0.0, seed, 1.0);
        const std::vector<int> region{1, 2, 3, 4};
        EXPECT_NEAR(renyi2_dense(l, region, 1), renyi2_counting(l, region, 1), 1e-9) << "seed " << seed;
    }
}

TEST(Dense, RenyiCountingRejectsMeasurements) {
    const std::vector<int> region{0};
    EXPECT_THROW(renyi2_counting(uniform_layout(4, 2, GateKind::P), region, 1), UnsupportedLayout);
}

TEST(Dense, GatesPreserveParity) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const double c = seed % 2 == 0 ? 0.5 : 1.0;
        const auto l = sample_layout(6, 6, 0.5, 0.5, 0.2, seed, c);
        Vector v = PairingState::nearest_neighbour(6, 0).ket(true);
        apply_layout(v, l, 6);
        if (v.norm() < kZeroNormGuard) {
            continue;
        }
        EXPECT_NEAR(total_parity(v, 6), 1.0, 1e-12);
    }
}

}  // namespace
}  // namespace braidcircuit
