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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace braidcircuit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Loop value of a closed worldline.
inline constexpr double kLoopValue = 2.0;

/// Scalars derived from the gate parameter c of the unitary braid matrix R(c).
///
/// R(c) = (a I + b P' + c SWAP) / sqrt(alpha) with a = i, b = -i, alpha = 1 + c^2.
/// The curl factors k_plus, k_minus are the eigenvalues of R on the Bell
/// projector (R P' = k_plus P', P'_i R_{i+1} P'_i = k_minus P'_i). Their phase
/// angle is phi = arccot(c), the branch in (0, pi); theta = arctan(c) is kept for
/// formulas written in terms of it.
struct RParams {
    double c = 1.0;
    double alpha = 2.0;
    Complex a{0.0, 1.0};
    Complex b{0.0, -1.0};
    double theta = 0.0;
    double phi = 0.0;
    Complex k_plus;
    Complex k_minus;
    /// Swap-dot factor (k_plus + k_minus) / 2, real, equal to c / sqrt(1 + c^2).
    Complex g;
    double n = kLoopValue;

    /// Throws InvalidParameter when c is not finite.
    static RParams from(double c);
};

/// arccot with range (0, pi): arctan(1/c) for c > 0, pi + arctan(1/c) for c < 0, pi/2 at 0.
double arccot(double c);

enum class GateType { R, Rdag, Pprime, P, I2, SWAP, BellKet, BellBra };

/// Dense matrix of a gate in basis order (uu, ud, du, dd), up = 0.
///
/// Pprime is the unnormalized Bell projector |uu+dd><uu+dd| (Pprime^2 = 2 Pprime),
/// P = Pprime / 2. BellKet is the column (1,0,0,1), BellBra its adjoint row.
/// `c` is only read for R and Rdag, but must be finite for every kind.
Matrix gate(GateType kind, double c = 1.0);

/// Leg grouping used when reshaping a two-site gate into its space-direction form.
/// OutIn puts (out_1, in_1) on rows and (out_2, in_2) on columns; InOut uses
/// (in_1, out_1) and (in_2, out_2).
enum class LegGrouping { OutIn, InOut };

/// Spatial transpose of a 4x4 gate. With OutIn the map is an involution.
Matrix dual_transpose(const Matrix &m, LegGrouping grouping = LegGrouping::OutIn);

/// -sum s^2 log2 s^2 over singular values s (0 log 0 = 0).
/// Throws NotNormalized when sum s^2 deviates from 1 by more than `tolerance`.
double von_neumann_entropy(std::span<const double> spectrum, double tolerance = 1e-9);

/// Singular values of m, descending.
std::vector<double> singular_values(const Matrix &m);

Matrix kron(const Matrix &a, const Matrix &b);

/// Two-site gate acting on sites (site, site + 1) of an open chain of `num_sites`.
Matrix embed_adjacent(const Matrix &two_site, int site, int num_sites);

double max_abs_diff(const Matrix &a, const Matrix &b);

bool is_unitary(const Matrix &m, double tolerance = 1e-12);

/// Two-site Pauli word with a sign, e.g. -Y1 Z2.
struct PauliWord {
    int sign = 1;
    std::array<char, 2> ops{'I', 'I'};

    /// Symplectic bits: bit0 = x1, bit1 = z1, bit2 = x2, bit3 = z2.
    std::uint8_t bits() const;
    std::string str() const;
    bool operator==(const PauliWord &) const = default;
};

/// Images of X1, X2, Z1, Z2 under conjugation by a two-qubit Clifford gate
/// (Heisenberg direction, G^dagger P G).
struct PauliMap {
    PauliWord x1;
    PauliWord x2;
    PauliWord z1;
    PauliWord z2;

    /// Maps the 4 symplectic bits of a phase-free two-qubit Pauli through the table.
    std::array<std::uint8_t, 16> bit_table() const;
};

enum class CliffordGate { RAtC1, SWAP };

PauliMap clifford_conjugation(CliffordGate kind);

/// Dense 4x4 matrix of a signed Pauli word.
Matrix pauli_matrix(const PauliWord &word);

}  // namespace braidcircuit
