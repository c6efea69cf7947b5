#!/usr/bin/env python3
# Copyright 2026 The braidcircuit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force tensor contractions used to freeze reference values.

Everything here is built from index-level definitions with explicit loops and
shares no code with the C++ library. Run it to regenerate
oracle_values.inc:

    python3 contraction_oracle.py > oracle_values.inc
"""

import numpy as np


def kd(i, j):
    return 1.0 if i == j else 0.0


def r_tensor(c):
    """R[o1, o2, i1, i2] = (i d d - i B B + c swap) / sqrt(1 + c^2)."""
    t = np.zeros((2, 2, 2, 2), dtype=complex)
    for o1, o2, i1, i2 in np.ndindex(2, 2, 2, 2):
        t[o1, o2, i1, i2] = (1j * kd(o1, i1) * kd(o2, i2)
                             - 1j * kd(o1, o2) * kd(i1, i2)
                             + c * kd(o1, i2) * kd(o2, i1))
    return t / np.sqrt(1 + c * c)


def swap_tensor():
    t = np.zeros((2, 2, 2, 2), dtype=complex)
    for o1, o2, i1, i2 in np.ndindex(2, 2, 2, 2):
        t[o1, o2, i1, i2] = kd(o1, i2) * kd(o2, i1)
    return t


def cupcap_tensor():
    t = np.zeros((2, 2, 2, 2), dtype=complex)
    for o1, o2, i1, i2 in np.ndindex(2, 2, 2, 2):
        t[o1, o2, i1, i2] = kd(o1, o2) * kd(i1, i2)
    return t


def link_operator(g12, g34):
    """O = P'_23 (G_12 x G_34) P'_23 as a 16x16 matrix, legs (1,2,3,4).

    Index names: inputs i1..i4; after the first P' on strands 2,3 -> i1 a2 a3 i4;
    after the gates -> b1 b2 b3 b4; after the second P' -> b1 o2 o3 b4.
    """
    p = cupcap_tensor()
    out = np.zeros((2,) * 8, dtype=complex)
    for i1, i2, i3, i4, a2, a3 in np.ndindex(2, 2, 2, 2, 2, 2):
        w1 = p[a2, a3, i2, i3]
        if w1 == 0:
            continue
        for b1, b2, b3, b4 in np.ndindex(2, 2, 2, 2):
            w2 = g12[b1, b2, i1, a2] * g34[b3, b4, a3, i4]
            if w2 == 0:
                continue
            for o2, o3 in np.ndindex(2, 2):
                out[b1, o2, o3, b4, i1, i2, i3, i4] += p[o2, o3, b2, b3] * w2 * w1
    return out.reshape(16, 16)


def entropy_of(op):
    s = np.linalg.svd(op / np.linalg.norm(op), compute_uv=False)
    w = s * s
    w = w[w > 1e-24]
    return float(-(w * np.log2(w)).sum())


def hopf(g12, g34):
    """16 <psi| P_23 G_12 G_34 P_23 |psi>, psi = 1/2 |B>_12 |B>_34, P = P'/2."""
    p = cupcap_tensor() / 2
    psi = np.zeros((2, 2, 2, 2), dtype=complex)
    for a, b in np.ndindex(2, 2):
        psi[a, a, b, b] = 0.5

    def p23(v):
        out = np.zeros_like(v)
        for a, b, c, d, y, z in np.ndindex(2, 2, 2, 2, 2, 2):
            out[a, b, c, d] += p[b, c, y, z] * v[a, y, z, d]
        return out

    v = p23(psi)
    w = np.zeros_like(v)
    for a, b, c, d, x, y, z, u in np.ndindex(2, 2, 2, 2, 2, 2, 2, 2):
        w[a, b, c, d] += g12[a, b, x, y] * g34[c, d, z, u] * v[x, y, z, u]
    v = p23(w)
    total = 0.0
    for idx in np.ndindex(2, 2, 2, 2):
        total += np.conj(psi[idx]) * v[idx]
    return 16 * complex(total)


LINK_C = [-3.0, -2.5, -2.0, -1.5, -0.75, -0.5, -0.3, -0.2, -0.1, 0.1,
          0.2, 0.3, 0.5, 0.75, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0]
HOPF_C = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0]


LICENSE = """\
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
"""


def main():
    print(LICENSE)
    print("// Generated by contraction_oracle.py; do not edit by hand.")
    print("// {c, two_R entropy, swap_R entropy}")
    print("inline constexpr OracleLink kLinkOracle[] = {")
    for c in LINK_C:
        a = entropy_of(link_operator(r_tensor(c), r_tensor(c)))
        b = entropy_of(link_operator(swap_tensor(), r_tensor(c)))
        print(f"    {{{c!r}, {float(a)!r}, {float(b)!r}}},")
    print("};")
    print("// {c, re, im} of the Hopf closure with two R crossings")
    print("inline constexpr OracleComplex kHopfOracle[] = {")
    for c in HOPF_C:
        h = hopf(r_tensor(c), r_tensor(c))
        print(f"    {{{c!r}, {float(h.real)!r}, {float(h.imag)!r}}},")
    print("};")
    print("// {c, re, im} of the closure with one swap dot")
    print("inline constexpr OracleComplex kSwapDotOracle[] = {")
    for c in HOPF_C:
        h = hopf(swap_tensor(), r_tensor(c))
        print(f"    {{{c!r}, {float(h.real)!r}, {float(h.imag)!r}}},")
    print("};")


if __name__ == "__main__":
    main()
