// Copyright 2026 The Homport Authors
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

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "homport/types.hpp"

namespace homport {

// Independent brute-force verifier. The output state is the formal product
// prod_i (sum_j U(j,i) b_j+) |0>, expanded monomial by monomial with the
// commutation (bosons) or anticommutation (fermions) rules applied directly.
// No permanents, no determinants; exists to cross-check the fast path.

/// Normal-ordered expansion of the output state: coefficient of each
/// occupation configuration, plus an audit count of processed monomials
/// (always exactly n^n).
struct NormalForm {
    Index n = 0;
    ParticleStatistics stats = ParticleStatistics::Boson;
    std::uint64_t monomial_count = 0;
    std::map<FockConfig, Complex, std::greater<FockConfig>> coefficients;

    /// Raw normal-form coefficient; zero if the configuration never occurs.
    Complex coefficient(const FockConfig& config) const;

    /// Amplitude of the normalized Fock state: coefficient * sqrt(prod n_j!).
    Complex fock_amplitude(const FockConfig& config) const;
};

/// Expands all n^n redirection choices. Bosonic operator strings reorder
/// freely; fermionic strings pick up one sign per adjacent transposition of
/// a stable sort, and a repeated operator kills the term (b+ squared = 0).
NormalForm expand_output_state(const ComplexMatrix& u, ParticleStatistics stats);

/// Squared modulus of the all-ones coefficient of the expansion.
double coincidence_from_expansion(const ComplexMatrix& u, ParticleStatistics stats);

/// Parity of the permutation (-1 odd, +1 even) by counting the adjacent
/// transpositions a stable insertion sort performs.
int parity_by_adjacent_swaps(std::vector<int> permutation);

/// Parity of the permutation of {0..n-1} from its cycle decomposition;
/// independent route used to cross-check the swap-count parity.
int parity_by_cycles(const std::vector<int>& permutation);

}  // namespace homport
