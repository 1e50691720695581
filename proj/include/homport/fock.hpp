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

#include <functional>
#include <map>
#include <vector>

#include "homport/types.hpp"

namespace homport {

// The input state is fixed to one particle per input port; every quantity
// below is an exact function of the transition matrix and the statistics.

/// One output configuration with its complex amplitude and probability.
struct DistributionEntry {
    Complex amplitude;
    double probability;
};

/// Exact output statistics of a scattering run: probability (and amplitude)
/// for every reachable occupation configuration, iterated in descending
/// lexicographic order so serialized output is diffable.
struct OutputDistribution {
    Index n = 0;
    ParticleStatistics stats = ParticleStatistics::Boson;
    std::map<FockConfig, DistributionEntry, std::greater<FockConfig>> entries;

    double total_probability() const;
    double probability(const FockConfig& config) const;
};

/// The all-ones configuration: one particle in every output port.
FockConfig coincidence_config(Index n);

/// Every output configuration reachable by n particles in n ports,
/// descending lexicographic: all weak compositions of n for bosons, the
/// single all-ones vector for fermions (Pauli exclusion).
std::vector<FockConfig> enumerate_configs(Index n, ParticleStatistics stats);

/// prod_j n_j! as a double.
double occupation_factorial_product(const FockConfig& config);

/// Amplitude of the normalized Fock state |config> in the output state.
/// Bosons: permanent of the row-repeated matrix over sqrt(prod n_j!);
/// fermions: det U for the all-ones configuration (the only valid one).
Complex amplitude(const ComplexMatrix& u, const FockConfig& config, ParticleStatistics stats,
                  double unitary_tol = kUnitaryTol);

/// Probability that every output port registers exactly one particle:
/// |perm U|^2 for bosons, |det U|^2 = 1 for fermions.
double coincidence_probability(const ComplexMatrix& u, ParticleStatistics stats,
                               Index dim_cap = kCoincidenceDimCap,
                               double unitary_tol = kUnitaryTol);

/// Exact probability for every reachable configuration. Bosonic runs are
/// capped at dim_cap by default; pass a larger cap to opt in to the cost.
OutputDistribution full_distribution(const ComplexMatrix& u, ParticleStatistics stats,
                                     Index dim_cap = kDistributionDimCap,
                                     double unitary_tol = kUnitaryTol);

}  // namespace homport
