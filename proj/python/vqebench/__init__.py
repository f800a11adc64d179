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

"""Statevector VQE and ADAPT-VQE on small active-space Hamiltonians."""

from ._core import (
    ContractError,
    FciSolution,
    InputError,
    Iteration,
    MolecularHamiltonian,
    ResourceLimitError,
    RunResult,
    parse_fcidump,
    pool_descriptions,
    read_fcidump,
    run_adapt,
    run_scan_csv,
    run_vqe,
    selftest,
    solve_fci,
)

__all__ = [
    "ContractError",
    "FciSolution",
    "InputError",
    "Iteration",
    "MolecularHamiltonian",
    "ResourceLimitError",
    "RunResult",
    "parse_fcidump",
    "pool_descriptions",
    "read_fcidump",
    "run_adapt",
    "run_scan_csv",
    "run_vqe",
    "selftest",
    "solve_fci",
]
