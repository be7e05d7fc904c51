#!/usr/bin/env python3
# Copyright 2026 The aquavqe Authors
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
"""Regenerates the bundled H2O STO-3G FCIDUMP fixtures and scan manifests.

Requires pyscf. The C++ code never calls this; the outputs are committed under
data/. Orbital phases are fixed (largest AO coefficient positive) so that
circuit parameters transfer between neighbouring geometries.
"""

import argparse
import math
import os

import numpy as np
from pyscf import ao2mo, gto, scf
from pyscf.tools import fcidump


def water(angle_deg, length):
    half = math.radians(angle_deg) / 2.0
    hx, hy = length * math.sin(half), length * math.cos(half)
    return [("O", (0.0, 0.0, 0.0)), ("H", (hx, hy, 0.0)), ("H", (-hx, hy, 0.0))]


def write_fixture(path, angle_deg, length):
    mol = gto.M(atom=water(angle_deg, length), basis="sto-3g", unit="Angstrom",
                verbose=0, symmetry=False)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    if not mf.converged:
        raise RuntimeError(f"SCF did not converge at {angle_deg}, {length}")
    mo = mf.mo_coeff.copy()
    for k in range(mo.shape[1]):
        col = mo[:, k]
        if col[np.argmax(np.abs(col))] < 0:
            mo[:, k] = -col
    h1 = mo.T @ mf.get_hcore() @ mo
    eri = ao2mo.kernel(mol, mo, compact=False).reshape([mo.shape[1]] * 4)
    fcidump.from_integrals(path, h1, ao2mo.restore(8, eri, mo.shape[1]),
                           mo.shape[1], mol.nelectron, nuc=mol.energy_nuc(),
                           ms=0, tol=1e-14, float_format=" %.16e")


def fixture_name(angle_deg, length):
    return f"h2o_a{angle_deg:.1f}_r{length:.3f}.fcidump"


MANIFEST_HEADER = """\
# Copyright 2026 The aquavqe Authors
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

"""


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = parser.parse_args()
    out = os.path.abspath(args.out)
    os.makedirs(os.path.join(out, "fcidump"), exist_ok=True)

    def emit(angle, length):
        name = fixture_name(angle, length)
        path = os.path.join(out, "fcidump", name)
        if not os.path.exists(path):
            write_fixture(path, angle, length)
        return f"fcidump/{name}"

    ref = emit(104.5, 0.945)
    with open(os.path.join(out, "reference.manifest"), "w") as fh:
        fh.write(MANIFEST_HEADER)
        fh.write("# H2O STO-3G at the experimental geometry\n")
        fh.write(f"104.5 0.945 {ref}\n")

    with open(os.path.join(out, "angle_scan.manifest"), "w") as fh:
        fh.write(MANIFEST_HEADER)
        fh.write("# H2O STO-3G angle scan, 85..125 deg step 2, r = 0.945 A\n")
        for angle in range(85, 126, 2):
            fh.write(f"{angle:.1f} 0.945 {emit(float(angle), 0.945)}\n")

    with open(os.path.join(out, "grid2d.manifest"), "w") as fh:
        fh.write(MANIFEST_HEADER)
        fh.write("# H2O STO-3G grid, 85..130 deg step 5, 0.85..1.15 A step 0.05\n")
        for angle in range(85, 131, 5):
            for k in range(7):
                length = round(0.85 + 0.05 * k, 3)
                fh.write(f"{angle:.1f} {length:.3f} {emit(float(angle), length)}\n")


if __name__ == "__main__":
    main()
