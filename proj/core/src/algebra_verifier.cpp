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

#include "braidcircuit/algebra_verifier.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace braidcircuit {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Gates placed on a short open chain; index i acts on sites (i-1, i), 1-based like the relations.
class Chain {
   public:
    Chain(int sites, double c) : sites_(sites), c_(c) {
    }
    Matrix at(GateType kind, int i) const {
        return embed_adjacent(gate(kind, c_), i - 1, sites_);
    }
    Matrix R(int i) const {
        return at(GateType::R, i);
    }
    Matrix Rd(int i) const {
        return at(GateType::Rdag, i);
    }
    Matrix S(int i) const {
        return at(GateType::SWAP, i);
    }
    Matrix Pp(int i) const {
        return at(GateType::Pprime, i);
    }
    Matrix I() const {
        return Matrix::Identity(Eigen::Index{1} << sites_, Eigen::Index{1} << sites_);
    }

   private:
    int sites_;
    double c_;
};

RelationReport compare(std::string name, double c, const Matrix &lhs, const Matrix &rhs, double tol) {
    RelationReport rep;
    rep.name = std::move(name);
    rep.c = c;
    rep.max_deviation = max_abs_diff(lhs, rhs);
    rep.passed = rep.max_deviation < tol;
    return rep;
}

/// Ratio lhs / base read off the largest entry of base; records it as the phase note.
Complex ratio_on_support(const Matrix &lhs, const Matrix &base) {
    Eigen::Index r = 0;
    Eigen::Index col = 0;
    base.cwiseAbs().maxCoeff(&r, &col);
    return lhs(r, col) / base(r, col);
}

RelationReport scalar_relation(std::string name, double c, const Matrix &lhs, const Matrix &base,
                               Complex factor, double tol) {
    RelationReport rep = compare(std::move(name), c, lhs, factor * base, tol);
    rep.phase_note = ratio_on_support(lhs, base);
    return rep;
}

}  // namespace

std::vector<RelationReport> verify_gate_properties(double c, double tolerance) {
    const RParams params = RParams::from(c);
    std::vector<RelationReport> out;
    const Matrix r = gate(GateType::R, c);
    const Matrix rd = gate(GateType::Rdag, c);
    const Matrix id = Matrix::Identity(4, 4);
    const Matrix pp = gate(GateType::Pprime);
    const Matrix sw = gate(GateType::SWAP);

    out.push_back(compare("unitarity R R^dag = I", c, r * rd, id, tolerance));
    out.push_back(compare("unitarity R^dag R = I", c, rd * r, id, tolerance));

    Chain ch(3, c);
    out.push_back(compare("Yang-Baxter R12 R23 R12 = R23 R12 R23", c, ch.R(1) * ch.R(2) * ch.R(1),
                          ch.R(2) * ch.R(1) * ch.R(2), tolerance));

    {
        RelationReport rep;
        rep.name = "dual-unitarity";
        rep.c = c;
        const Matrix d_oi = dual_transpose(r, LegGrouping::OutIn);
        const Matrix d_io = dual_transpose(r, LegGrouping::InOut);
        const double dev_oi = max_abs_diff(d_oi * d_oi.adjoint(), id);
        const double dev_io = max_abs_diff(d_io * d_io.adjoint(), id);
        rep.max_deviation = std::min(dev_oi, dev_io);
        rep.passed = rep.max_deviation < tolerance;
        rep.note = std::string("OutIn grouping ") + (dev_oi < tolerance ? "unitary" : "not unitary") +
                   "; InOut grouping " + (dev_io < tolerance ? "unitary" : "not unitary");
        out.push_back(rep);
    }

    const double root = std::sqrt(params.alpha);
    out.push_back(compare("decomposition sqrt(alpha) R = a I + b P' + c SWAP", c, root * r,
                          params.a * id + params.b * pp + c * sw, tolerance));
    out.push_back(compare("decomposition sqrt(alpha) R^dag = b I + a P' + c SWAP", c, root * rd,
                          params.b * id + params.a * pp + c * sw, tolerance));

    // V = exp(i pi X1 / 4) exp(i pi X2 / 4), each factor (I + i X) / sqrt(2).
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    const Matrix half = (Matrix::Identity(2, 2) + kI * x) / std::numbers::sqrt2;
    const Matrix v = kron(half, half);
    Matrix frame = Matrix::Zero(4, 4);
    frame(0, 0) = frame(3, 3) = std::polar(1.0, params.phi);
    frame(1, 2) = frame(2, 1) = std::polar(1.0, -params.phi);
    out.push_back(compare("XXZ frame V R V^dag = phase matrix", c, v * r * v.adjoint(), frame, tolerance));

    // H = XX + YY - (4 phi / pi - 1) ZZ - I and exp(-i pi H / 4) equals the frame matrix.
    const Matrix xx = pauli_matrix({1, {'X', 'X'}});
    const Matrix yy = pauli_matrix({1, {'Y', 'Y'}});
    const Matrix zz = pauli_matrix({1, {'Z', 'Z'}});
    const Matrix h = xx + yy - (4.0 * params.phi / std::numbers::pi - 1.0) * zz - id;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    Eigen::VectorXcd phases(4);
    for (int k = 0; k < 4; ++k) {
        phases(k) = std::exp(-kI * std::numbers::pi / 4.0 * eig.eigenvalues()(k));
    }
    const Matrix evolution = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
    out.push_back(compare("XXZ frame exp(-i pi H / 4) = V R V^dag", c, evolution, v * r * v.adjoint(),
                          tolerance));
    return out;
}

std::vector<RelationReport> verify_brauer(double tolerance) {
    std::vector<RelationReport> out;
    const double c = 0.0;  // not used by SWAP or P'
    Chain ch(3, c);
    Chain wide(4, c);
    auto add = [&](std::string name, const Matrix &a, const Matrix &b) {
        out.push_back(compare(std::move(name), c, a, b, tolerance));
    };
    auto commutator = [](const Matrix &a, const Matrix &b) -> Matrix { return a * b - b * a; };
    const Matrix zero4 = Matrix::Zero(16, 16);

    add("S1^2 = I", ch.S(1) * ch.S(1), ch.I());
    add("P'1^2 = 2 P'1", ch.Pp(1) * ch.Pp(1), 2.0 * ch.Pp(1));
    add("[S1, S3] = 0", commutator(wide.S(1), wide.S(3)), zero4);
    add("[S1, P'3] = 0", commutator(wide.S(1), wide.Pp(3)), zero4);
    add("[P'1, S3] = 0", commutator(wide.Pp(1), wide.S(3)), zero4);
    add("[P'1, P'3] = 0", commutator(wide.Pp(1), wide.Pp(3)), zero4);
    add("S1 S2 S1 = S2 S1 S2", ch.S(1) * ch.S(2) * ch.S(1), ch.S(2) * ch.S(1) * ch.S(2));
    add("P'1 P'2 P'1 = P'1", ch.Pp(1) * ch.Pp(2) * ch.Pp(1), ch.Pp(1));
    add("P'2 P'1 P'2 = P'2", ch.Pp(2) * ch.Pp(1) * ch.Pp(2), ch.Pp(2));
    add("S1 S2 P'1 = P'2 P'1", ch.S(1) * ch.S(2) * ch.Pp(1), ch.Pp(2) * ch.Pp(1));
    add("S2 S1 P'2 = P'1 P'2", ch.S(2) * ch.S(1) * ch.Pp(2), ch.Pp(1) * ch.Pp(2));
    add("P'1 S2 S1 = P'1 P'2", ch.Pp(1) * ch.S(2) * ch.S(1), ch.Pp(1) * ch.Pp(2));
    add("P'2 S1 S2 = P'2 P'1", ch.Pp(2) * ch.S(1) * ch.S(2), ch.Pp(2) * ch.Pp(1));
    add("S1 P'1 = P'1", ch.S(1) * ch.Pp(1), ch.Pp(1));
    add("P'1 S1 = P'1", ch.Pp(1) * ch.S(1), ch.Pp(1));
    add("P'1 S2 P'1 = P'1", ch.Pp(1) * ch.S(2) * ch.Pp(1), ch.Pp(1));
    add("P'2 S1 P'2 = P'2", ch.Pp(2) * ch.S(1) * ch.Pp(2), ch.Pp(2));
    return out;
}

std::vector<RelationReport> verify_bmw(double c, double tolerance) {
    const RParams params = RParams::from(c);
    std::vector<RelationReport> out;
    Chain ch(3, c);
    Chain wide(4, c);
    auto add = [&](std::string name, const Matrix &a, const Matrix &b) {
        out.push_back(compare(std::move(name), c, a, b, tolerance));
    };
    auto commutator = [](const Matrix &a, const Matrix &b) -> Matrix { return a * b - b * a; };
    const Matrix zero4 = Matrix::Zero(16, 16);

    // Brauer relations that survive with SWAP replaced by R.
    add("P'1^2 = 2 P'1", ch.Pp(1) * ch.Pp(1), 2.0 * ch.Pp(1));
    add("[R1, R3] = 0", commutator(wide.R(1), wide.R(3)), zero4);
    add("[R1, P'3] = 0", commutator(wide.R(1), wide.Pp(3)), zero4);
    add("[P'1, R3] = 0", commutator(wide.Pp(1), wide.R(3)), zero4);
    add("R1 R2 R1 = R2 R1 R2", ch.R(1) * ch.R(2) * ch.R(1), ch.R(2) * ch.R(1) * ch.R(2));
    add("P'1 P'2 P'1 = P'1", ch.Pp(1) * ch.Pp(2) * ch.Pp(1), ch.Pp(1));
    add("R1 R2 P'1 = P'2 P'1", ch.R(1) * ch.R(2) * ch.Pp(1), ch.Pp(2) * ch.Pp(1));
    add("R2 R1 P'2 = P'1 P'2", ch.R(2) * ch.R(1) * ch.Pp(2), ch.Pp(1) * ch.Pp(2));
    add("P'1 R2 R1 = P'1 P'2", ch.Pp(1) * ch.R(2) * ch.R(1), ch.Pp(1) * ch.Pp(2));
    add("P'2 R1 R2 = P'2 P'1", ch.Pp(2) * ch.R(1) * ch.R(2), ch.Pp(2) * ch.Pp(1));

    // Skein relation.
    add("skein R - R^dag = (2i / sqrt(1+c^2)) (I - P')", ch.R(1) - ch.Rd(1),
        (2.0 * kI / std::sqrt(params.alpha)) * (ch.I() - ch.Pp(1)));

    // Delooping.
    out.push_back(scalar_relation("delooping R1 P'1 = k+ P'1", c, ch.R(1) * ch.Pp(1), ch.Pp(1), params.k_plus,
                                  tolerance));
    out.push_back(scalar_relation("delooping P'1 R1 = k+ P'1", c, ch.Pp(1) * ch.R(1), ch.Pp(1), params.k_plus,
                                  tolerance));
    out.push_back(scalar_relation("delooping P'1 R2 P'1 = k- P'1", c, ch.Pp(1) * ch.R(2) * ch.Pp(1), ch.Pp(1),
                                  params.k_minus, tolerance));
    out.push_back(scalar_relation("delooping P'2 R1 P'2 = k- P'2", c, ch.Pp(2) * ch.R(1) * ch.Pp(2), ch.Pp(2),
                                  params.k_minus, tolerance));

    add("R2 P'1 R2 = R1^dag P'2 R1^dag", ch.R(2) * ch.Pp(1) * ch.R(2), ch.Rd(1) * ch.Pp(2) * ch.Rd(1));
    add("R1 P'2 R1 = R2^dag P'1 R2^dag", ch.R(1) * ch.Pp(2) * ch.R(1), ch.Rd(2) * ch.Pp(1) * ch.Rd(2));
    add("R2 P'1 P'2 = R1^dag P'2", ch.R(2) * ch.Pp(1) * ch.Pp(2), ch.Rd(1) * ch.Pp(2));
    add("R1 P'2 P'1 = R2^dag P'1", ch.R(1) * ch.Pp(2) * ch.Pp(1), ch.Rd(2) * ch.Pp(1));
    add("P'2 P'1 R2 = P'2 R1^dag", ch.Pp(2) * ch.Pp(1) * ch.R(2), ch.Pp(2) * ch.Rd(1));
    add("P'1 P'2 R1 = P'1 R2^dag", ch.Pp(1) * ch.Pp(2) * ch.R(1), ch.Pp(1) * ch.Rd(2));

    {
        // Witness: R^2 differs from I by a finite amount.
        RelationReport rep;
        rep.name = "R1^2 != I";
        rep.c = c;
        const double gap = max_abs_diff(ch.R(1) * ch.R(1), ch.I());
        rep.max_deviation = 0.0;
        rep.passed = gap > tolerance;
        rep.note = "max |R^2 - I| = " + std::to_string(gap);
        out.push_back(rep);
    }
    return out;
}

HopfResult hopf_invariant(double c, double tolerance) {
    const RParams params = RParams::from(c);
    HopfResult res;
    res.c = c;

    const Matrix bell = gate(GateType::BellKet);
    const Matrix psi = kron(bell, bell) / 2.0;
    Chain ch(4, c);
    const Matrix p23 = ch.at(GateType::P, 2);
    const Matrix r12_r34 = kron(gate(GateType::R, c), gate(GateType::R, c));
    const Complex overlap = (psi.adjoint() * p23 * r12_r34 * p23 * psi)(0, 0);
    res.dense = 16.0 * overlap;

    res.closed_form = 4.0 * (c - 1.0) * (c - 1.0) / (1.0 + c * c);
    const double n = params.n;
    res.skein_expansion = n * n + (2.0 * kI / std::sqrt(params.alpha)) * (params.k_minus - params.k_plus) * n;
    res.modulus_matches_closed_form = std::abs(std::abs(res.dense) - res.closed_form) < tolerance;
    res.matches_skein_expansion = std::abs(res.dense - res.skein_expansion) < tolerance;
    res.phase = std::arg(res.dense);
    return res;
}

bool all_passed(const std::vector<RelationReport> &reports) {
    for (const auto &r : reports) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

std::string reports_to_json(const std::vector<RelationReport> &reports, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["c"] = r.c;
        j["max_deviation"] = r.max_deviation;
        j["passed"] = r.passed;
        if (r.phase_note) {
            j["phase_note"] = {{"re", r.phase_note->real()}, {"im", r.phase_note->imag()}};
        }
        if (!r.note.empty()) {
            j["note"] = r.note;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(indent);
}

}  // namespace braidcircuit
