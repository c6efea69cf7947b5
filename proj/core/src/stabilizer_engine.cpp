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

#include "braidcircuit/stabilizer_engine.hpp"

#include <algorithm>
#include <bit>

#include "braidcircuit/errors.hpp"

namespace braidcircuit {

namespace {

constexpr int kWordBits = 64;

int words_for(int bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

bool get_bit(const std::uint64_t *v, int i) {
    return (v[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void put_bit(std::uint64_t *v, int i, bool value) {
    const std::uint64_t m = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        v[i / kWordBits] |= m;
    } else {
        v[i / kWordBits] &= ~m;
    }
}

/// Column mixing matrix of a phase-free two-qubit map: out[k] = XOR_i M[k][i] in[i]
/// with inputs ordered (x_a, z_a, x_b, z_b).
struct ColumnMix {
    std::array<std::uint8_t, 4> rows{};

    explicit ColumnMix(const PauliMap &map) {
        const std::array<std::uint8_t, 4> images{map.x1.bits(), map.z1.bits(), map.x2.bits(), map.z2.bits()};
        for (int k = 0; k < 4; ++k) {
            for (int i = 0; i < 4; ++i) {
                if ((images[i] >> k) & 1U) {
                    rows[k] |= static_cast<std::uint8_t>(1U << i);
                }
            }
        }
    }
};

const PauliMap &r_map() {
    static const PauliMap map = clifford_conjugation(CliffordGate::RAtC1);
    return map;
}

}  // namespace

PhaseFreeTableau::PhaseFreeTableau(int num_qubits) : n_(num_qubits), words_(words_for(num_qubits)) {
    if (num_qubits < 1) {
        throw InvalidParameter("tableau needs at least one qubit");
    }
    bits_.assign(static_cast<std::size_t>(2 * n_) * words_, 0);
}

PhaseFreeTableau PhaseFreeTableau::tfds(int L) {
    if (L < 1) {
        throw InvalidParameter("tfds: L must be positive");
    }
    PhaseFreeTableau t(2 * L);
    for (int i = 0; i < L; ++i) {
        t.set(i, i, true, false);
        t.set(i, i + L, true, false);
        t.set(L + i, i, false, true);
        t.set(L + i, i + L, false, true);
    }
    return t;
}

PhaseFreeTableau PhaseFreeTableau::from_strings(std::span<const std::string> rows) {
    if (rows.empty()) {
        throw InvalidParameter("from_strings: no rows");
    }
    auto body = [](const std::string &s) {
        std::string_view v = s;
        if (!v.empty() && (v.front() == '+' || v.front() == '-')) {
            v.remove_prefix(1);
        }
        return v;
    };
    const int n = static_cast<int>(body(rows.front()).size());
    if (static_cast<int>(rows.size()) != n) {
        throw DimensionMismatch("from_strings: need as many rows as qubits");
    }
    PhaseFreeTableau t(n);
    for (int r = 0; r < n; ++r) {
        const auto v = body(rows[r]);
        if (static_cast<int>(v.size()) != n) {
            throw DimensionMismatch("from_strings: ragged rows");
        }
        for (int q = 0; q < n; ++q) {
            switch (v[q]) {
                case 'I':
                    break;
                case 'X':
                    t.set(r, q, true, false);
                    break;
                case 'Z':
                    t.set(r, q, false, true);
                    break;
                case 'Y':
                    t.set(r, q, true, true);
                    break;
                default:
                    throw InvalidParameter("from_strings: unknown Pauli letter");
            }
        }
    }
    return t;
}

void PhaseFreeTableau::check_qubit(int q) const {
    if (q < 0 || q >= n_) {
        throw InvalidParameter("qubit index out of range");
    }
}

void PhaseFreeTableau::set(int row, int qubit, bool xbit, bool zbit) {
    put_bit(xcol(qubit), row, xbit);
    put_bit(zcol(qubit), row, zbit);
}

bool PhaseFreeTableau::x(int row, int qubit) const {
    return get_bit(xcol(qubit), row);
}

bool PhaseFreeTableau::z(int row, int qubit) const {
    return get_bit(zcol(qubit), row);
}

std::string PhaseFreeTableau::row_string(int row) const {
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    std::string s(static_cast<std::size_t>(n_), 'I');
    for (int q = 0; q < n_; ++q) {
        s[q] = kLetters[x(row, q) | (z(row, q) << 1)];
    }
    return s;
}

void PhaseFreeTableau::apply_two_qubit(const PauliMap &map, int a, int b) {
    check_qubit(a);
    check_qubit(b);
    const ColumnMix mix(map);
    Word *cols[4] = {xcol(a), zcol(a), xcol(b), zcol(b)};
    for (int w = 0; w < words_; ++w) {
        const Word in[4] = {cols[0][w], cols[1][w], cols[2][w], cols[3][w]};
        for (int k = 0; k < 4; ++k) {
            Word out = 0;
            for (int i = 0; i < 4; ++i) {
                if ((mix.rows[k] >> i) & 1U) {
                    out ^= in[i];
                }
            }
            cols[k][w] = out;
        }
    }
}

void PhaseFreeTableau::apply_swap(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    std::swap_ranges(xcol(a), xcol(a) + words_, xcol(b));
    std::swap_ranges(zcol(a), zcol(a) + words_, zcol(b));
}

void PhaseFreeTableau::replace_anticommuting(const std::vector<Word> &anti, std::span<const int> x_support,
                                             std::span<const int> z_support) {
    int pivot = -1;
    for (int w = 0; w < words_; ++w) {
        if (anti[w] != 0) {
            pivot = w * kWordBits + std::countr_zero(anti[w]);
            break;
        }
    }
    if (pivot < 0) {
        return;  // already in the stabilizer group up to sign
    }
    std::vector<Word> others = anti;
    put_bit(others.data(), pivot, false);
    const int pw = pivot / kWordBits;
    const Word pm = Word{1} << (pivot % kWordBits);
    for (int col = 0; col < 2 * n_; ++col) {
        Word *v = bits_.data() + static_cast<std::size_t>(col) * words_;
        if (v[pw] & pm) {
            for (int w = 0; w < words_; ++w) {
                v[w] ^= others[w];
            }
            v[pw] &= ~pm;
        }
    }
    for (int q : x_support) {
        xcol(q)[pw] ^= pm;
    }
    for (int q : z_support) {
        zcol(q)[pw] ^= pm;
    }
}

void PhaseFreeTableau::measure(std::span<const int> x_support, std::span<const int> z_support) {
    std::vector<Word> anti(static_cast<std::size_t>(words_), 0);
    for (int q : x_support) {
        check_qubit(q);
        const Word *zc = zcol(q);
        for (int w = 0; w < words_; ++w) {
            anti[w] ^= zc[w];
        }
    }
    for (int q : z_support) {
        check_qubit(q);
        const Word *xc = xcol(q);
        for (int w = 0; w < words_; ++w) {
            anti[w] ^= xc[w];
        }
    }
    replace_anticommuting(anti, x_support, z_support);
}

void PhaseFreeTableau::measure_bell(int a, int b) {
    const std::array<int, 2> pair{a, b};
    measure(pair, {});
    measure({}, pair);
}

void PhaseFreeTableau::apply_layout(const CircuitLayout &layout) {
    layout.validate();
    if (layout.c != 1.0) {
        throw UnsupportedParameter("stabilizer engine only simulates c = 1");
    }
    if (layout.L > n_) {
        throw DimensionMismatch("layout is wider than the tableau");
    }
    const PauliMap &rm = r_map();
    for (int t = 0; t < layout.T; ++t) {
        for (int j = 0; j < layout.bonds_per_layer(); ++j) {
            const auto [a, b] = layout.bond(t, j);
            switch (layout.at(t, j)) {
                case GateKind::R:
                    apply_two_qubit(rm, a, b);
                    break;
                case GateKind::SWAP:
                    apply_swap(a, b);
                    break;
                case GateKind::P:
                    measure_bell(a, b);
                    break;
                case GateKind::I:
                    break;
            }
        }
    }
}

int gf2_rank(std::vector<std::uint64_t> vectors, int words) {
    if (words <= 0) {
        return 0;
    }
    const int count = static_cast<int>(vectors.size() / static_cast<std::size_t>(words));
    auto vec = [&](int i) { return vectors.data() + static_cast<std::size_t>(i) * words; };
    int rank = 0;
    for (int w = 0; w < words && rank < count; ++w) {
        for (int bit = 0; bit < kWordBits && rank < count; ++bit) {
            const std::uint64_t m = std::uint64_t{1} << bit;
            int found = -1;
            for (int i = rank; i < count; ++i) {
                if (vec(i)[w] & m) {
                    found = i;
                    break;
                }
            }
            if (found < 0) {
                continue;
            }
            if (found != rank) {
                std::swap_ranges(vec(found), vec(found) + words, vec(rank));
            }
            const std::uint64_t *p = vec(rank);
            for (int i = found + 1; i < count; ++i) {
                std::uint64_t *v = vec(i);
                if (v[w] & m) {
                    for (int k = w; k < words; ++k) {
                        v[k] ^= p[k];
                    }
                }
            }
            ++rank;
        }
    }
    return rank;
}

int PhaseFreeTableau::entanglement(std::span<const int> region) const {
    std::vector<Word> vectors;
    vectors.reserve(2 * region.size() * static_cast<std::size_t>(words_));
    for (int q : region) {
        check_qubit(q);
        vectors.insert(vectors.end(), xcol(q), xcol(q) + words_);
        vectors.insert(vectors.end(), zcol(q), zcol(q) + words_);
    }
    return gf2_rank(std::move(vectors), words_) - static_cast<int>(region.size());
}

int PhaseFreeTableau::entanglement_prefix(int count) const {
    if (count < 0 || count > n_) {
        throw InvalidParameter("entanglement_prefix: bad count");
    }
    std::vector<Word> vectors(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(count) * words_);
    vectors.insert(vectors.end(), bits_.begin() + static_cast<std::ptrdiff_t>(n_) * words_,
                   bits_.begin() + static_cast<std::ptrdiff_t>(n_ + count) * words_);
    return gf2_rank(std::move(vectors), words_) - count;
}

bool PhaseFreeTableau::is_valid() const {
    if (n_ == 0 || gf2_rank(bits_, words_) != n_) {
        return false;
    }
    // Row j commutes with every row iff sum_q x_j(q) Z_q + z_j(q) X_q vanishes.
    std::vector<Word> acc(static_cast<std::size_t>(words_));
    for (int j = 0; j < n_; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int q = 0; q < n_; ++q) {
            if (x(j, q)) {
                for (int w = 0; w < words_; ++w) {
                    acc[w] ^= zcol(q)[w];
                }
            }
            if (z(j, q)) {
                for (int w = 0; w < words_; ++w) {
                    acc[w] ^= xcol(q)[w];
                }
            }
        }
        if (std::any_of(acc.begin(), acc.end(), [](Word w) { return w != 0; })) {
            return false;
        }
    }
    return true;
}

int stabilizer_entropy(const CircuitLayout &layout) {
    auto t = PhaseFreeTableau::tfds(layout.L);
    t.apply_layout(layout);
    return t.entanglement_prefix(layout.L);
}

}  // namespace braidcircuit
