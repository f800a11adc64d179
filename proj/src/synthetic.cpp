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

#include "vqebench/synthetic.hpp"

namespace vqebench {

MolecularHamiltonian random_hamiltonian(std::size_t n_spatial, std::size_t n_electrons,
                                        std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto m = MolecularHamiltonian::zeros(n_spatial, n_electrons);
  m.label = "random";
  m.core_energy = 0.5 + 0.2 * unit(rng);
  for (std::size_t i = 0; i < n_spatial; ++i) {
    m.h1(i, i) = -1.5 + 0.9 * static_cast<double>(i) + 0.1 * unit(rng);
    for (std::size_t j = 0; j < i; ++j) {
      m.h1(i, j) = m.h1(j, i) = 0.1 * unit(rng);
    }
  }
  for (std::size_t i = 0; i < n_spatial; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < n_spatial; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          double v = 0.05 * unit(rng);
          if (i == j && k == l) v += 0.6;
          if (i == k && j == l && i != j) v += 0.15;
          m.set_eri(i, j, k, l, v);
        }
  return m;
}

}  // namespace vqebench
