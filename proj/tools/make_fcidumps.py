#!/usr/bin/env python3
# Copyright 2026 The vqebench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the committed FCIDUMP test data with PySCF.

Each dump is a CAS(2,2) active space (sigma / sigma*) on top of canonical
RHF/STO-3G orbitals, with the frozen-core energy folded into the constant.
For H2 the active space is the full space. Alongside the dumps a
reference.csv records PySCF's own CASCI energy for every geometry so the
C++ oracle can be cross-checked against an independent solver.

Usage: python3 tools/make_fcidumps.py [--out data]
"""

import argparse
import os

import numpy as np
from pyscf import ao2mo, gto, mcscf, scf
from pyscf.tools import fcidump

SCANS = {
    "h2": ("H", [round(0.5 + 0.1 * k, 2) for k in range(21)]),
    "nah": ("Na", [round(1.2 + 0.1 * k, 2) for k in range(19)]),
    "kh": ("K", [round(1.4 + 0.1 * k, 2) for k in range(26)]),
    "h2_eq": ("H", [0.735]),
}


def dump_point(heavy, r, path):
    mol = gto.M(atom=f"{heavy} 0 0 0; H 0 0 {r}", basis="sto-3g", unit="Angstrom",
                verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    if not mf.converged:
        raise RuntimeError(f"RHF did not converge for {heavy}H r={r}")
    mc = mcscf.CASCI(mf, 2, 2)
    mc.fcisolver.conv_tol = 1e-13
    e_cas = mc.kernel()[0]
    h1, ecore = mc.get_h1eff()
    h2 = ao2mo.restore(8, mc.get_h2eff(), 2)
    fcidump.from_integrals(path, h1, h2, 2, 2, nuc=ecore, ms=0,
                           tol=1e-15, float_format=" %.17g")
    return e_cas, mf.e_tot


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="data")
    args = parser.parse_args()
    for name, (heavy, grid) in SCANS.items():
        folder = os.path.join(args.out, name)
        os.makedirs(folder, exist_ok=True)
        rows = ["label,file,casci_energy,rhf_energy"]
        for r in grid:
            label = f"{r:.3f}" if name == "h2_eq" else f"{r:.2f}"
            fname = f"{name}_{label}.fcidump"
            e_cas, e_hf = dump_point(heavy, r, os.path.join(folder, fname))
            rows.append(f"{label},{fname},{e_cas:.12f},{e_hf:.12f}")
            print(f"{name} r={label} E_CAS={e_cas:.10f} E_RHF={e_hf:.10f}")
        with open(os.path.join(folder, "reference.csv"), "w") as f:
            f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
