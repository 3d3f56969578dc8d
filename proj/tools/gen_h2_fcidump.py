#!/usr/bin/env python3
# Copyright 2026 The qvqe developers
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
"""Generates RHF/STO-3G FCIDUMP files for H2 at a given bond distance.

All integrals over s-type contracted Gaussians have closed forms (Boys
function F0), so the one- and two-electron MO integrals are exact. The
molecular orbitals of minimal-basis H2 are fixed by symmetry (sigma_g,
sigma_u), so no SCF iteration is required. Integrals are written in
chemists' notation (pq|rs) with the canonical 8-fold-symmetric entries.

Usage: gen_h2_fcidump.py R_ANGSTROM OUTPUT_PATH
"""

import math
import sys

BOHR_PER_ANGSTROM = 1.0 / 0.52917721092

# STO-3G hydrogen 1s: exponents (zeta=1.24 scaling included) and contractions.
EXPONENTS = [3.42525091, 0.62391373, 0.16885540]
COEFFS = [0.15432897, 0.53532814, 0.44463454]


def norm_s(alpha):
    return (2.0 * alpha / math.pi) ** 0.75


def boys0(t):
    if t < 1e-12:
        return 1.0
    return 0.5 * math.sqrt(math.pi / t) * math.erf(math.sqrt(t))


def primitive_pairs(center_a, center_b):
    for alpha, da in zip(EXPONENTS, COEFFS):
        for beta, db in zip(EXPONENTS, COEFFS):
            p = alpha + beta
            mu = alpha * beta / p
            r2 = (center_a - center_b) ** 2
            pref = da * db * norm_s(alpha) * norm_s(beta)
            kab = math.exp(-mu * r2)
            pc = (alpha * center_a + beta * center_b) / p
            yield alpha, beta, p, pref, kab, pc


def overlap(center_a, center_b):
    return sum(pref * kab * (math.pi / p) ** 1.5
               for _, _, p, pref, kab, _ in primitive_pairs(center_a, center_b))


def kinetic(center_a, center_b):
    total = 0.0
    for alpha, beta, p, pref, kab, _ in primitive_pairs(center_a, center_b):
        mu = alpha * beta / p
        r2 = (center_a - center_b) ** 2
        total += pref * kab * mu * (3.0 - 2.0 * mu * r2) * (math.pi / p) ** 1.5
    return total


def nuclear(center_a, center_b, nuclei):
    total = 0.0
    for _, _, p, pref, kab, pc in primitive_pairs(center_a, center_b):
        for z, center_c in nuclei:
            total -= pref * kab * z * (2.0 * math.pi / p) * boys0(p * (pc - center_c) ** 2)
    return total


def eri(ca, cb, cc, cd):
    total = 0.0
    for alpha, beta, p, pref_ab, kab, pp in primitive_pairs(ca, cb):
        for gamma, delta, q, pref_cd, kcd, pq in primitive_pairs(cc, cd):
            rho = p * q / (p + q)
            pref = pref_ab * pref_cd * kab * kcd
            total += pref * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q)) * boys0(
                rho * (pp - pq) ** 2)
    return total


def h2_integrals(r_angstrom):
    r = r_angstrom * BOHR_PER_ANGSTROM
    centers = [0.0, r]
    nuclei = [(1.0, centers[0]), (1.0, centers[1])]

    s12 = overlap(centers[0], centers[1])
    t = [[kinetic(a, b) for b in centers] for a in centers]
    v = [[nuclear(a, b, nuclei) for b in centers] for a in centers]
    h_ao = [[t[i][j] + v[i][j] for j in range(2)] for i in range(2)]
    eri_ao = [[[[eri(centers[i], centers[j], centers[k], centers[l])
                 for l in range(2)] for k in range(2)] for j in range(2)] for i in range(2)]

    # Symmetry-adapted MOs: bonding sigma_g and antibonding sigma_u.
    cg = 1.0 / math.sqrt(2.0 * (1.0 + s12))
    cu = 1.0 / math.sqrt(2.0 * (1.0 - s12))
    mo = [[cg, cu], [cg, -cu]]  # mo[ao][orbital]

    h_mo = [[sum(mo[a][i] * mo[b][j] * h_ao[a][b] for a in range(2) for b in range(2))
             for j in range(2)] for i in range(2)]

    def eri_mo(i, j, k, l):
        total = 0.0
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    for d in range(2):
                        total += mo[a][i] * mo[b][j] * mo[c][k] * mo[d][l] * eri_ao[a][b][c][d]
        return total

    e_core = 1.0 / r
    return h_mo, eri_mo, e_core


def reference_energies(h_mo, eri_mo, e_core):
    """RHF and FCI (2 electrons, 2 orbitals, singlet) for validation."""
    e_hf = 2.0 * h_mo[0][0] + eri_mo(0, 0, 0, 0) + e_core
    # Singlet FCI in the {|11 closed>, |22 closed>} pair basis plus the open
    # singlet; for H2 the ground state mixes the two closed configurations.
    h11 = 2.0 * h_mo[0][0] + eri_mo(0, 0, 0, 0)
    h22 = 2.0 * h_mo[1][1] + eri_mo(1, 1, 1, 1)
    h12 = eri_mo(0, 1, 0, 1)
    mid = 0.5 * (h11 + h22)
    rad = math.sqrt((0.5 * (h11 - h22)) ** 2 + h12 ** 2)
    return e_hf, mid - rad + e_core


def write_fcidump(path, r_angstrom):
    h_mo, eri_mo, e_core = h2_integrals(r_angstrom)
    e_hf, e_fci = reference_energies(h_mo, eri_mo, e_core)

    lines = []
    lines.append("! H2 RHF/STO-3G at R = %.4f Angstrom, sigma_g/sigma_u orbitals." % r_angstrom)
    lines.append("! Generated by tools/gen_h2_fcidump.py (closed-form s-Gaussian integrals,")
    lines.append("! Boys-function evaluation; chemists' notation two-electron values).")
    lines.append("&FCI NORB=2,NELEC=2,MS2=0,")
    lines.append(" ORBSYM=1,1,")
    lines.append(" ISYM=1,")
    lines.append("&END")

    def rec(v, i, j, k, l):
        lines.append("%23.16E %3d %3d %3d %3d" % (v, i, j, k, l))

    seen = set()
    for i in range(1, 3):
        for j in range(1, i + 1):
            for k in range(1, i + 1):
                for l in range(1, k + 1):
                    ij = i * (i + 1) // 2 + j
                    kl = k * (k + 1) // 2 + l
                    if ij < kl:
                        continue
                    val = eri_mo(i - 1, j - 1, k - 1, l - 1)
                    if abs(val) < 1e-14 or (i, j, k, l) in seen:
                        continue
                    seen.add((i, j, k, l))
                    rec(val, i, j, k, l)
    for i in range(1, 3):
        for j in range(1, i + 1):
            val = h_mo[i - 1][j - 1]
            if abs(val) >= 1e-14:
                rec(val, i, j, 0, 0)
    rec(e_core, 0, 0, 0, 0)

    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    return e_hf, e_fci


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    r = float(sys.argv[1])
    e_hf, e_fci = write_fcidump(sys.argv[2], r)
    print("R = %.4f A   E_HF = %.10f Ha   E_FCI = %.10f Ha" % (r, e_hf, e_fci))


if __name__ == "__main__":
    main()
