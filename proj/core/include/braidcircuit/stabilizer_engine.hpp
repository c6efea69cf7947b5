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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "braidcircuit/circuit_layout.hpp"
#include "braidcircuit/gate_algebra.hpp"

namespace braidcircuit {

/// Stabilizer generators over GF(2) with sign bits dropped.
///
/// Storage is column-major: for every qubit q there is an X column and a Z column,
/// each a bit vector over the generator rows. A two-qubit Clifford then acts on
/// four columns with word-wide XORs, and a forced Pauli measurement touches each
/// column once.
class PhaseFreeTableau {
   public:
    PhaseFreeTableau() = default;
    /// n qubits, n rows, all zero (not a valid state until rows are set).
    explicit PhaseFreeTableau(int num_qubits);

    /// Generators X_i X_{i+L} and Z_i Z_{i+L}; part 1 = qubits 0..L-1, part 2 = L..2L-1.
    static PhaseFreeTableau tfds(int L);
    /// Generators from Pauli strings over {I, X, Y, Z}; a leading sign is ignored.
    static PhaseFreeTableau from_strings(std::span<const std::string> rows);

    int num_qubits() const {
        return n_;
    }
    bool x(int row, int qubit) const;
    bool z(int row, int qubit) const;
    /// Row as a Pauli string, e.g. "XIZY".
    std::string row_string(int row) const;

    /// Conjugate qubits (a, b) by the phase-free map of a two-qubit Clifford.
    void apply_two_qubit(const PauliMap &map, int a, int b);
    void apply_swap(int a, int b);
    /// Forced measurement of X_a X_b followed by Z_a Z_b, outcomes discarded.
    void measure_bell(int a, int b);
    /// Forced measurement of one phase-free Pauli given as X and Z support masks.
    void measure(std::span<const int> x_support, std::span<const int> z_support);

    /// Applies the layout to qubits 0..L-1. Throws UnsupportedParameter unless c == 1.
    void apply_layout(const CircuitLayout &layout);

    /// rank(generators restricted to the region's columns) - |region|.
    int entanglement(std::span<const int> region) const;
    /// Entanglement of qubits [0, count).
    int entanglement_prefix(int count) const;

    /// Rank n and pairwise commuting rows.
    bool is_valid() const;

   private:
    using Word = std::uint64_t;
    Word *xcol(int q) {
        return bits_.data() + static_cast<std::size_t>(q) * words_;
    }
    Word *zcol(int q) {
        return bits_.data() + static_cast<std::size_t>(n_ + q) * words_;
    }
    const Word *xcol(int q) const {
        return bits_.data() + static_cast<std::size_t>(q) * words_;
    }
    const Word *zcol(int q) const {
        return bits_.data() + static_cast<std::size_t>(n_ + q) * words_;
    }
    void check_qubit(int q) const;
    void set(int row, int qubit, bool xbit, bool zbit);
    /// Forced measurement given the mask of rows that anticommute with the operator.
    void replace_anticommuting(const std::vector<Word> &anti, std::span<const int> x_support,
                               std::span<const int> z_support);

    int n_ = 0;
    int words_ = 0;
    std::vector<Word> bits_;
};

/// Entanglement of part 1 after running the layout on a fresh TFDS (c == 1 only).
int stabilizer_entropy(const CircuitLayout &layout);

/// Rank over GF(2) of bit vectors of `words` words each, laid out back to back.
int gf2_rank(std::vector<std::uint64_t> vectors, int words);

}  // namespace braidcircuit
