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

#include "braidcircuit/gate_algebra.hpp"

#include <algorithm>

#include <cmath>
#include <numbers>

#include "braidcircuit/errors.hpp"

namespace braidcircuit {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_finite(double c) {
    if (!std::isfinite(c)) {
        throw InvalidParameter("gate parameter c must be finite");
    }
}

Matrix single_pauli(char op) {
    Matrix m = Matrix::Zero(2, 2);
    switch (op) {
        case 'I':
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 'X':
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 'Y':
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case 'Z':
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
        default:
            throw InvalidParameter(std::string("unknown Pauli letter ") + op);
    }
    return m;
}

std::uint8_t letter_bits(char op) {
    switch (op) {
        case 'X':
            return 0b01;
        case 'Z':
            return 0b10;
        case 'Y':
            return 0b11;
        default:
            return 0;
    }
}

}  // namespace

double arccot(double c) {
    return std::atan2(1.0, c);
}

RParams RParams::from(double c) {
    require_finite(c);
    RParams r;
    r.c = c;
    r.alpha = 1.0 + c * c;
    r.theta = std::atan(c);
    r.phi = arccot(c);
    r.k_plus = std::polar(1.0, -r.phi);
    r.k_minus = std::polar(1.0, r.phi);
    r.g = (r.k_plus + r.k_minus) / 2.0;
    return r;
}

Matrix gate(GateType kind, double c) {
    require_finite(c);
    switch (kind) {
        case GateType::R:
        case GateType::Rdag: {
            Matrix r(4, 4);
            // clang-format off
            r << c,   0,  0,  -kI,
                 0,   kI, c,  0,
                 0,   c,  kI, 0,
                 -kI, 0,  0,  c;
            // clang-format on
            r /= std::sqrt(1.0 + c * c);
            if (kind == GateType::Rdag) {
                return r.adjoint();
            }
            return r;
        }
        case GateType::Pprime:
        case GateType::P: {
            Matrix p = Matrix::Zero(4, 4);
            p(0, 0) = p(0, 3) = p(3, 0) = p(3, 3) = 1;
            return kind == GateType::P ? Matrix(p / 2.0) : p;
        }
        case GateType::I2:
            return Matrix::Identity(4, 4);
        case GateType::SWAP: {
            Matrix s = Matrix::Zero(4, 4);
            s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1;
            return s;
        }
        case GateType::BellKet: {
            Matrix v = Matrix::Zero(4, 1);
            v(0, 0) = v(3, 0) = 1;
            return v;
        }
        case GateType::BellBra: {
            Matrix v = Matrix::Zero(1, 4);
            v(0, 0) = v(0, 3) = 1;
            return v;
        }
    }
    throw InvalidParameter("unknown gate kind");
}

Matrix dual_transpose(const Matrix &m, LegGrouping grouping) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw DimensionMismatch("dual_transpose expects a 4x4 two-site gate");
    }
    Matrix d(4, 4);
    for (int o1 = 0; o1 < 2; ++o1) {
        for (int o2 = 0; o2 < 2; ++o2) {
            for (int i1 = 0; i1 < 2; ++i1) {
                for (int i2 = 0; i2 < 2; ++i2) {
                    Complex v = m(2 * o1 + o2, 2 * i1 + i2);
                    if (grouping == LegGrouping::OutIn) {
                        d(2 * o1 + i1, 2 * o2 + i2) = v;
                    } else {
                        d(2 * i1 + o1, 2 * i2 + o2) = v;
                    }
                }
            }
        }
    }
    return d;
}

double von_neumann_entropy(std::span<const double> spectrum, double tolerance) {
    double total = 0.0;
    for (double s : spectrum) {
        if (s < 0.0 || !std::isfinite(s)) {
            throw InvalidParameter("spectrum entries must be finite and non-negative");
        }
        total += s * s;
    }
    if (std::abs(total - 1.0) > tolerance) {
        throw NotNormalized("squared spectrum sums to " + std::to_string(total));
    }
    double entropy = 0.0;
    for (double s : spectrum) {
        double w = s * s;
        if (w > 0.0) {
            entropy -= w * std::log2(w);
        }
    }
    // -0.0 shows up for pure spectra.
    return entropy == 0.0 ? 0.0 : entropy;
}

std::vector<double> singular_values(const Matrix &m) {
    // Eigen 3.4.0's divide-and-conquer SVD returns NaN or silently wrong values
    // on some rank-deficient operators, so it is not used. Small matrices go
    // through Jacobi; larger ones through the Hermitian eigenproblem of the
    // smaller Gram matrix, which is exact to ~1e-16 in sigma^2.
    constexpr Eigen::Index kJacobiMax = 128;
    if (std::min(m.rows(), m.cols()) <= kJacobiMax) {
        Eigen::JacobiSVD<Matrix> svd(m);
        const auto &sv = svd.singularValues();
        return {sv.data(), sv.data() + sv.size()};
    }
    const Matrix gram = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram, Eigen::EigenvaluesOnly);
    const auto &ev = eig.eigenvalues();
    std::vector<double> out(static_cast<std::size_t>(ev.size()));
    // Descending order, clamped at zero.
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        out[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, ev[ev.size() - 1 - i]));
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix embed_adjacent(const Matrix &two_site, int site, int num_sites) {
    if (two_site.rows() != 4 || two_site.cols() != 4) {
        throw DimensionMismatch("embed_adjacent expects a 4x4 gate");
    }
    if (site < 0 || site + 1 >= num_sites) {
        throw DimensionMismatch("embed_adjacent: site out of range");
    }
    Matrix left = Matrix::Identity(Eigen::Index{1} << site, Eigen::Index{1} << site);
    Matrix right = Matrix::Identity(Eigen::Index{1} << (num_sites - site - 2),
                                    Eigen::Index{1} << (num_sites - site - 2));
    return kron(kron(left, two_site), right);
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix &m, double tolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs_diff(m * m.adjoint(), Matrix::Identity(m.rows(), m.cols())) < tolerance;
}

std::uint8_t PauliWord::bits() const {
    return static_cast<std::uint8_t>(letter_bits(ops[0]) | (letter_bits(ops[1]) << 2));
}

std::string PauliWord::str() const {
    std::string out = sign < 0 ? "-" : "+";
    bool any = false;
    for (int k = 0; k < 2; ++k) {
        if (ops[k] != 'I') {
            out += ops[k];
            out += static_cast<char>('1' + k);
            any = true;
        }
    }
    if (!any) {
        out += "I";
    }
    return out;
}

std::array<std::uint8_t, 16> PauliMap::bit_table() const {
    // Generators in bit order x1, z1, x2, z2.
    const std::array<std::uint8_t, 4> images{x1.bits(), z1.bits(), x2.bits(), z2.bits()};
    std::array<std::uint8_t, 16> table{};
    for (std::uint8_t in = 0; in < 16; ++in) {
        std::uint8_t out = 0;
        for (int k = 0; k < 4; ++k) {
            if ((in >> k) & 1) {
                out ^= images[k];
            }
        }
        table[in] = out;
    }
    return table;
}

PauliMap clifford_conjugation(CliffordGate kind) {
    if (kind == CliffordGate::RAtC1) {
        return PauliMap{
            .x1 = {-1, {'Y', 'Z'}},
            .x2 = {-1, {'Z', 'Y'}},
            .z1 = {+1, {'Y', 'X'}},
            .z2 = {+1, {'X', 'Y'}},
        };
    }
    return PauliMap{
        .x1 = {+1, {'I', 'X'}},
        .x2 = {+1, {'X', 'I'}},
        .z1 = {+1, {'I', 'Z'}},
        .z2 = {+1, {'Z', 'I'}},
    };
}

Matrix pauli_matrix(const PauliWord &word) {
    return static_cast<double>(word.sign) * kron(single_pauli(word.ops[0]), single_pauli(word.ops[1]));
}

}  // namespace braidcircuit
