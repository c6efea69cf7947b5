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

#include <optional>
#include <string>
#include <vector>

#include "braidcircuit/gate_algebra.hpp"

namespace braidcircuit {

inline constexpr double kRelationTolerance = 1e-10;

/// Outcome of one dense matrix identity check.
struct RelationReport {
    std::string name;
    double c = 0.0;
    double max_deviation = 0.0;
    bool passed = false;
    /// Unit-modulus factor observed between the two sides, when one was measured.
    std::optional<Complex> phase_note;
    /// Free-form detail (e.g. which leg grouping was unitary).
    std::string note;
};

/// Unitarity, Yang-Baxter, dual-unitarity, three-piece decomposition and the
/// XXZ-frame identity for R(c).
std::vector<RelationReport> verify_gate_properties(double c, double tolerance = kRelationTolerance);

/// Brauer relations of SWAP and P' on 3 sites (4 sites for distant commutation).
std::vector<RelationReport> verify_brauer(double tolerance = kRelationTolerance);

/// BMW relations of R(c) and P' plus the R^2 != I witness.
std::vector<RelationReport> verify_bmw(double c, double tolerance = kRelationTolerance);

/// Hopf link closure of two R(c) crossings.
struct HopfResult {
    double c = 0.0;
    /// 16 <psi| P_23 R_12 R_34 P_23 |psi>, psi = 1/2 |uu+dd>_12 |uu+dd>_34, P = P'/2.
    Complex dense;
    /// 4 (c - 1)^2 / (1 + c^2).
    double closed_form = 0.0;
    /// n^2 + (2i/sqrt(1+c^2)) (k_minus - k_plus) n with the RParams curl factors,
    /// i.e. the skein expansion of one crossing followed by delooping.
    Complex skein_expansion;
    /// |dense| == closed_form within tolerance.
    bool modulus_matches_closed_form = false;
    /// dense == skein_expansion within tolerance.
    bool matches_skein_expansion = false;
    double phase = 0.0;  ///< arg(dense)
};

HopfResult hopf_invariant(double c, double tolerance = kRelationTolerance);

bool all_passed(const std::vector<RelationReport> &reports);

/// JSON array of report objects.
std::string reports_to_json(const std::vector<RelationReport> &reports, int indent = 2);

}  // namespace braidcircuit
