// Copyright 2026 The vqebench Authors
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

#include <cstddef>
#include <random>

#include "vqebench/hamiltonian.hpp"

namespace vqebench {

/// Random closed-shell-like integrals with the full 8-fold ERI symmetry.
/// Orbital energies rise with the index so the aufbau determinant is a
/// sensible reference; off-diagonal couplings are small but nonzero.
MolecularHamiltonian random_hamiltonian(std::size_t n_spatial, std::size_t n_electrons,
                                        std::mt19937_64& rng);

}  // namespace vqebench
