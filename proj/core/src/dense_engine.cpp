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

#include "braidcircuit/dense_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "braidcircuit/errors.hpp"

namespace braidcircuit {

namespace {

// State vectors beyond this many qubits are refused outright.
constexpr int kMaxStateQubits = 24;

void check_register(Eigen::Index rows, int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
        throw ResourceLimit("register size out of range");
    }
    if (rows != (Eigen::Index{1} << num_qubits)) {
        throw DimensionMismatch("state dimension does not match qubit count");
    }
}

void kernel(Complex *data, Eigen::Index rows, Eigen::Index cols, const Matrix &g, int a, int b, int num_qubits) {
    if (g.rows() != 4 || g.cols() != 4) {
        throw DimensionMismatch("two-site gate must be 4x4");
    }
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits || a == b) {
        throw InvalidParameter("bad qubit pair");
    }
    const Eigen::Index ma = Eigen::Index{1} << (num_qubits - 1 - a);
    const Eigen::Index mb = Eigen::Index{1} << (num_qubits - 1 - b);
    Complex m[4][4];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            m[r][c] = g(r, c);
        }
    }
    for (Eigen::Index col = 0; col < cols; ++col) {
        Complex *x = data + col * rows;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i & (ma | mb)) {
                continue;
            }
            const Eigen::Index idx[4] = {i, i | mb, i | ma, i | ma | mb};
            const Complex v[4] = {x[idx[0]], x[idx[1]], x[idx[2]], x[idx[3]]};
            for (int r = 0; r < 4; ++r) {
                x[idx[r]] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] + m[r][3] * v[3];
            }
        }
    }
}

template <class M>
void run_layout(M &states, const CircuitLayout &layout, int num_qubits) {
    layout.validate();
    if (layout.L > num_qubits) {
        throw DimensionMismatch("layout wider than register");
    }
    const Matrix gates[4] = {slot_gate(GateKind::R, layout.c), slot_gate(GateKind::SWAP, layout.c),
                             slot_gate(GateKind::P, layout.c), Matrix()};
    for (int t = 0; t < layout.T; ++t) {
        for (int j = 0; j < layout.bonds_per_layer(); ++j) {
            const GateKind kind = layout.at(t, j);
            if (kind == GateKind::I) {
                continue;
            }
            const auto [a, b] = layout.bond(t, j);
            apply_two_site(states, gates[static_cast<int>(kind)], a, b, num_qubits);
        }
    }
}

double spectrum_entropy(std::vector<double> sv) {
    for (double &s : sv) {
        if (s < kSingularCutoff) {
            s = 0.0;
        }
    }
    return von_neumann_entropy(sv);
}

std::vector<bool> region_mask(std::span<const int> region, int num_sites) {
    std::vector<bool> in(static_cast<std::size_t>(num_sites), false);
    for (int s : region) {
        if (s < 0 || s >= num_sites || in[s]) {
            throw InvalidParameter("region must list distinct sites inside the chain");
        }
        in[s] = true;
    }
    return in;
}

}  // namespace

Matrix slot_gate(GateKind kind, double c) {
    switch (kind) {
        case GateKind::R:
            return gate(GateType::R, c);
        case GateKind::SWAP:
            return gate(GateType::SWAP);
        case GateKind::P:
            return gate(GateType::P);
        case GateKind::I:
            break;
    }
    return gate(GateType::I2);
}

void apply_two_site(Matrix &states, const Matrix &g, int a, int b, int num_qubits) {
    check_register(states.rows(), num_qubits);
    kernel(states.data(), states.rows(), states.cols(), g, a, b, num_qubits);
}

void apply_two_site(Vector &state, const Matrix &g, int a, int b, int num_qubits) {
    check_register(state.size(), num_qubits);
    kernel(state.data(), state.size(), 1, g, a, b, num_qubits);
}

void apply_layout(Vector &state, const CircuitLayout &layout, int num_qubits) {
    run_layout(state, layout, num_qubits);
}

void apply_layout(Matrix &states, const CircuitLayout &layout, int num_qubits) {
    run_layout(states, layout, num_qubits);
}

Matrix circuit_operator(const CircuitLayout &layout) {
    if (layout.L > kMaxOperatorSites) {
        throw ResourceLimit("circuit_operator: L exceeds " + std::to_string(kMaxOperatorSites));
    }
    const Eigen::Index dim = Eigen::Index{1} << layout.L;
    Matrix u = Matrix::Identity(dim, dim);
    apply_layout(u, layout, layout.L);
    return u;
}

double operator_entropy(const Matrix &m) {
    const double norm = m.norm();
    if (!(norm > kZeroNormGuard)) {
        throw ZeroNormTrajectory("operator norm below guard");
    }
    return spectrum_entropy(singular_values(m / norm));
}

double trajectory_entropy(const CircuitLayout &layout) {
    return operator_entropy(circuit_operator(layout));
}

double bipartite_entropy(const Vector &state, int num_qubits, int cut) {
    check_register(state.size(), num_qubits);
    if (cut < 0 || cut > num_qubits) {
        throw InvalidParameter("cut out of range");
    }
    // Column-major view: rows index the trailing qubits, columns the leading `cut`.
    const Eigen::Index rows = Eigen::Index{1} << (num_qubits - cut);
    const Eigen::Index cols = Eigen::Index{1} << cut;
    const Eigen::Map<const Matrix> view(state.data(), rows, cols);
    return operator_entropy(view);
}

double renyi2_entropy(const Vector &state, int num_qubits, std::span<const int> region) {
    check_register(state.size(), num_qubits);
    const auto in = region_mask(region, num_qubits);
    const int na = static_cast<int>(region.size());
    const double norm2 = state.squaredNorm();
    if (!(std::sqrt(norm2) > kZeroNormGuard)) {
        throw ZeroNormTrajectory("state norm below guard");
    }
    Matrix m = Matrix::Zero(Eigen::Index{1} << na, Eigen::Index{1} << (num_qubits - na));
    for (Eigen::Index i = 0; i < state.size(); ++i) {
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        for (int q = 0; q < num_qubits; ++q) {
            const Eigen::Index bit = (i >> (num_qubits - 1 - q)) & 1;
            if (in[q]) {
                r = (r << 1) | bit;
            } else {
                c = (c << 1) | bit;
            }
        }
        m(r, c) = state[i];
    }
    const Matrix rho = (m.rows() <= m.cols()) ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
    const double purity = rho.squaredNorm() / (norm2 * norm2);
    const double s2 = -std::log2(purity);
    return std::abs(s2) < 1e-14 ? 0.0 : s2;
}

PairingState PairingState::tfds(int L) {
    if (L < 1) {
        throw InvalidParameter("tfds: L must be positive");
    }
    PairingState s;
    s.pairing.resize(2 * static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        s.pairing[i] = i + L;
        s.pairing[i + L] = i;
    }
    return s;
}

PairingState PairingState::nearest_neighbour(int L, int offset) {
    if (L < 2 || L % 2 != 0) {
        throw InvalidParameter("nearest_neighbour: L must be even");
    }
    PairingState s;
    s.pairing.resize(static_cast<std::size_t>(L));
    for (int j = 0; j < L / 2; ++j) {
        const int a = ((2 * j + offset) % L + L) % L;
        const int b = (a + 1) % L;
        s.pairing[a] = b;
        s.pairing[b] = a;
    }
    return s;
}

void PairingState::validate() const {
    const int m = num_qubits();
    if (m < 2 || m % 2 != 0) {
        throw InvalidParameter("pairing needs an even number of sites");
    }
    for (int i = 0; i < m; ++i) {
        const int j = pairing[i];
        if (j < 0 || j >= m || j == i || pairing[j] != i) {
            throw InvalidParameter("pairing is not a perfect matching");
        }
    }
}

Vector PairingState::ket(bool normalized) const {
    validate();
    const int m = num_qubits();
    if (m > kMaxStateQubits) {
        throw ResourceLimit("pairing state too large");
    }
    // Enumerate one bit per pair and copy it onto the partner.
    std::vector<int> leaders;
    for (int i = 0; i < m; ++i) {
        if (i < pairing[i]) {
            leaders.push_back(i);
        }
    }
    const Eigen::Index dim = Eigen::Index{1} << m;
    Vector v = Vector::Zero(dim);
    const double amp = normalized ? std::pow(2.0, -0.25 * m) : 1.0;
    const auto pairs = static_cast<unsigned>(leaders.size());
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << pairs); ++k) {
        Eigen::Index idx = 0;
        for (unsigned p = 0; p < pairs; ++p) {
            if ((k >> p) & 1U) {
                idx |= Eigen::Index{1} << (m - 1 - leaders[p]);
                idx |= Eigen::Index{1} << (m - 1 - pairing[leaders[p]]);
            }
        }
        v[idx] = amp;
    }
    return v;
}

Vector evolve_tfds(const CircuitLayout &layout) {
    if (layout.L > kMaxTfdsSites) {
        throw ResourceLimit("evolve_tfds: L exceeds " + std::to_string(kMaxTfdsSites));
    }
    Vector state = PairingState::tfds(layout.L).ket(true);
    apply_layout(state, layout, 2 * layout.L);
    return state;
}

double evolve_tfds_entropy(const CircuitLayout &layout) {
    const Vector state = evolve_tfds(layout);
    return bipartite_entropy(state, 2 * layout.L, layout.L);
}

Matrix link_operator(LinkPiece piece, double c) {
    const Matrix id = Matrix::Identity(2, 2);
    const Matrix p23 = kron(kron(id, gate(GateType::Pprime)), id);
    const Matrix g12 = piece == LinkPiece::TwoR ? gate(GateType::R, c) : gate(GateType::SWAP);
    return p23 * kron(g12, gate(GateType::R, c)) * p23;
}

double link_entropy(LinkPiece piece, double c) {
    return operator_entropy(link_operator(piece, c));
}

Complex topological_invariant(const PairingState &bra, const Vector &ket, int num_P, int L) {
    const Vector b = bra.ket(true);
    if (b.size() != ket.size()) {
        throw DimensionMismatch("bra and ket sizes differ");
    }
    return std::pow(kLoopValue, 0.5 * L + num_P) * b.dot(ket);
}

Complex hopf_closure(LinkPiece piece, double c) {
    const PairingState psi{{1, 0, 3, 2}};
    Vector v = psi.ket(true);
    const Matrix p = gate(GateType::P);
    const Matrix g12 = piece == LinkPiece::TwoR ? gate(GateType::R, c) : gate(GateType::SWAP);
    apply_two_site(v, p, 1, 2, 4);
    apply_two_site(v, g12, 0, 1, 4);
    apply_two_site(v, gate(GateType::R, c), 2, 3, 4);
    apply_two_site(v, p, 1, 2, 4);
    return topological_invariant(psi, v, 2, 4);
}

int renyi2_counting(const CircuitLayout &layout, std::span<const int> region, int bell_offset) {
    layout.validate();
    const int L = layout.L;
    if (layout.count(GateKind::P) + layout.count(GateKind::I) != 0) {
        throw UnsupportedLayout("counting rule needs a crossing-only layout");
    }
    const auto in = region_mask(region, L);
    // occupant[x] = initial site of the worldline currently at x.
    std::vector<int> occupant(static_cast<std::size_t>(L));
    for (int x = 0; x < L; ++x) {
        occupant[x] = x;
    }
    for (int t = 0; t < layout.T; ++t) {
        for (int j = 0; j < layout.bonds_per_layer(); ++j) {
            const auto [a, b] = layout.bond(t, j);
            std::swap(occupant[a], occupant[b]);
        }
    }
    std::vector<int> final_pos(static_cast<std::size_t>(L));
    for (int x = 0; x < L; ++x) {
        final_pos[occupant[x]] = x;
    }
    const auto bell = PairingState::nearest_neighbour(L, bell_offset);
    int count = 0;
    for (int s = 0; s < L; ++s) {
        const int partner = bell.pairing[s];
        if (s < partner && in[final_pos[s]] != in[final_pos[partner]]) {
            ++count;
        }
    }
    return count;
}

double renyi2_dense(const CircuitLayout &layout, std::span<const int> region, int bell_offset) {
    Vector state = PairingState::nearest_neighbour(layout.L, bell_offset).ket(true);
    apply_layout(state, layout, layout.L);
    return renyi2_entropy(state, layout.L, region);
}

double total_parity(const Vector &state, int num_qubits) {
    check_register(state.size(), num_qubits);
    double signed_sum = 0.0;
    double total = 0.0;
    for (Eigen::Index i = 0; i < state.size(); ++i) {
        const double w = std::norm(state[i]);
        total += w;
        signed_sum += (std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0) ? w : -w;
    }
    if (!(std::sqrt(total) > kZeroNormGuard)) {
        throw ZeroNormTrajectory("state norm below guard");
    }
    return signed_sum / total;
}

}  // namespace braidcircuit
