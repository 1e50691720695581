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

#include <vector>

#include "homport/types.hpp"

namespace homport {

// Experiment driver: parity sweeps over the Bell multiport, the
// cyclic-symmetry identity chain behind the even-n dip, and the
// boson/fermion discrimination summary.

enum class Parity { Even, Odd };

inline const char* to_string(Parity parity) {
    return parity == Parity::Even ? "even" : "odd";
}

/// Entrywise tolerance for Lambda*U against the column-cycled U.
inline constexpr double kCycleEntryTol = 1e-15;

/// Tolerance for the permanent identities perm(Lambda*U) =
/// perm(Lambda)*perm(U) and perm(Lambda) = e^{i*pi*(n+1)}.
inline constexpr double kPermanentIdentityTol = 1e-12;

/// Coincidence summary for one port count and statistics. For odd-n boson
/// runs the nonzero |perm U|^2 is reported so the no-dip case shows up
/// quantitatively, not as a bare boolean.
struct DipReport {
    Index n = 0;
    ParticleStatistics stats = ParticleStatistics::Boson;
    double coincidence_probability = 0.0;
    Complex matrix_function;  // perm U for bosons, det U for fermions
    bool is_dip = false;      // |matrix_function| at or below vanishing_tolerance(n)
    Parity parity = Parity::Odd;
};

/// Report for one transition matrix.
DipReport dip_report(const ComplexMatrix& u, ParticleStatistics stats,
                     Index dim_cap = kCoincidenceDimCap, double unitary_tol = kUnitaryTol);

/// One report per port count over the Bell multiport family. Bosons dip
/// exactly at even n; fermions show probability 1 throughout.
std::vector<DipReport> parity_sweep(int n_min, int n_max, ParticleStatistics stats,
                                    Index cap = kSweepDimCap);

/// Deviations of the three identities behind the even-n dip: Lambda*U is the
/// column-cycled U, the permanent factors over the diagonal matrix, and
/// perm(Lambda) is the closed-form parity sign.
struct CyclicSymmetryReport {
    Index n = 0;
    double column_cycle_deviation = 0.0;      // max |(Lambda U)(j,i) - U(j, cyc(i))|
    double multiplicativity_deviation = 0.0;  // |perm(Lambda U) - perm(Lambda) perm(U)|
    double parity_deviation = 0.0;            // |perm(Lambda) - e^{i pi (n+1)}|
    Complex lambda_permanent_value;           // kernel value of perm(Lambda)
    bool passed = false;
};

CyclicSymmetryReport verify_cyclic_symmetry(Index n);

/// Which statistics a measured coincidence rate is consistent with, given
/// the boson prediction |perm U|^2 and the fermion prediction 1. Both or
/// neither matching within tol yields Inconclusive.
enum class StatisticsVerdict { ConsistentWithBoson, ConsistentWithFermion, Inconclusive };

inline const char* to_string(StatisticsVerdict verdict) {
    switch (verdict) {
        case StatisticsVerdict::ConsistentWithBoson:
            return "consistent-with-boson";
        case StatisticsVerdict::ConsistentWithFermion:
            return "consistent-with-fermion";
        default:
            return "inconclusive";
    }
}

StatisticsVerdict discriminate_statistics(const ComplexMatrix& u, double observed_coincidence,
                                          double tol, Index dim_cap = kPermanentDimCap,
                                          double unitary_tol = kUnitaryTol);

}  // namespace homport
