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

#include <span>
#include <vector>

#include "braidcircuit/circuit_layout.hpp"
#include "braidcircuit/gate_algebra.hpp"

namespace braidcircuit {

/// Exact state-vector and operator simulation for small chains.
///
/// Qubit 0 is the most significant bit of a basis index, so a two-site gate on
/// (a, b) sees the basis (uu, ud, du, dd) with a as the first factor. Forced
/// measurements apply P = P'/2 without renormalization.

inline constexpr int kMaxOperatorSites = 14;
inline constexpr int kMaxTfdsSites = 7;
/// Frobenius norms at or below this are treated as an annihilated trajectory.
inline constexpr double kZeroNormGuard = 1e-12;
/// Normalized singular values below this are dropped from entropy sums.
inline constexpr double kSingularCutoff = 1e-12;

/// 4x4 matrix used for a layout slot (R uses the layout's c, P is P'/2).
Matrix slot_gate(GateKind kind, double c);

/// Apply a 4x4 gate to qubits (a, b) of every column of `states` (2^num_qubits rows).
void apply_two_site(Matrix &states, const Matrix &g, int a, int b, int num_qubits);
void apply_two_site(Vector &state, const Matrix &g, int a, int b, int num_qubits);

/// Apply the layout to qubits 0..L-1 of a register of num_qubits >= L qubits.
void apply_layout(Vector &state, const CircuitLayout &layout, int num_qubits);
void apply_layout(Matrix &states, const CircuitLayout &layout, int num_qubits);

/// 2^L x 2^L product of all layers. Throws ResourceLimit for L > kMaxOperatorSites.
Matrix circuit_operator(const CircuitLayout &layout);

/// Entropy of the singular spectrum of m / ||m||_F.
/// Throws ZeroNormTrajectory when ||m||_F <= kZeroNormGuard.
double operator_entropy(const Matrix &m);

/// Operator entanglement of the trajectory, in bits.
double trajectory_entropy(const CircuitLayout &layout);

/// Entropy of the first `cut` qubits of a pure state (normalized internally).
double bipartite_entropy(const Vector &state, int num_qubits, int cut);

/// Rényi-2 entropy of the qubits in `region`.
double renyi2_entropy(const Vector &state, int num_qubits, std::span<const int> region);

/// Product of Bell pairs along a perfect matching of sites.
struct PairingState {
    std::vector<int> pairing;

    /// Thermofield double on 2L qubits: i paired with i + L.
    static PairingState tfds(int L);
    /// Nearest-neighbour pairs (offset + 2j, offset + 2j + 1) mod L.
    static PairingState nearest_neighbour(int L, int offset);

    int num_qubits() const {
        return static_cast<int>(pairing.size());
    }
    /// Throws InvalidParameter unless pairing is a fixed-point-free involution.
    void validate() const;
    /// Amplitude 1 on every consistent basis state, or 2^{-m/4} when normalized.
    Vector ket(bool normalized = true) const;
};

/// TFDS evolved by U on part 1 (unnormalized). Throws ResourceLimit for L > kMaxTfdsSites.
Vector evolve_tfds(const CircuitLayout &layout);

/// Entropy of part 1 of the evolved, normalized TFDS.
double evolve_tfds_entropy(const CircuitLayout &layout);

enum class LinkPiece { TwoR, SwapR };

/// O = P'_23 (G_12 x G_34) P'_23 with G_12 = R(c) or SWAP and G_34 = R(c).
Matrix link_operator(LinkPiece piece, double c);
double link_entropy(LinkPiece piece, double c);

/// n^{L/2 + num_P} <bra|ket> with n = 2; the value of the closed diagram obtained by
/// capping the (unnormalized, P = P'/2) circuit output with the bra pairing.
Complex topological_invariant(const PairingState &bra, const Vector &ket, int num_P, int L);

/// Hopf closure 16 <psi| P_23 G_12 R_34 P_23 |psi>, G = R(c) or SWAP (the latter
/// being the two-loop diagram with one swap dot).
Complex hopf_closure(LinkPiece piece, double c);

/// Counting rule for crossing-only layouts acting on nearest-neighbour Bell pairs
/// (offset `bell_offset`): the number of pairs with exactly one end inside `region`
/// after worldlines are carried through the crossings.
/// Throws UnsupportedLayout if the layout contains P or I.
int renyi2_counting(const CircuitLayout &layout, std::span<const int> region, int bell_offset = 1);

/// Rényi-2 entropy of `region` for the same initial state, computed densely.
double renyi2_dense(const CircuitLayout &layout, std::span<const int> region, int bell_offset = 1);

/// <prod_i Z_i> of the normalized state.
double total_parity(const Vector &state, int num_qubits);

}  // namespace braidcircuit
