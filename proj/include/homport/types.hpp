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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace homport {

inline constexpr const char* kVersion = "1.0.0";

/// Default scalar for all physics computations. The matrix builders and
/// kernels are templated, so other precisions can be plugged in.
using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Dense square matrix of complex transition amplitudes, row index = output
/// port, column index = input port (0-based in storage, 1-based in docs).
using ComplexMatrix = DenseMatrix<Real>;
using ComplexVector = DenseVector<Real>;

using Index = Eigen::Index;

/// Occupation numbers per output port; entry j counts particles in port j.
using FockConfig = std::vector<int>;

/// Exchange statistics of the scattered particles: bosonic creation
/// operators commute, fermionic ones anticommute.
enum class ParticleStatistics { Boson, Fermion };

inline const char* to_string(ParticleStatistics stats) {
    return stats == ParticleStatistics::Boson ? "boson" : "fermion";
}

// ── Tolerances and caps ──────────────────────────────────────────────────────

/// Default unitarity tolerance for validating transition matrices. An order
/// of magnitude above the double-precision error accumulated by ~30 chained
/// 2x2 stages.
inline constexpr double kUnitaryTol = 1e-10;

/// Hard cap on the permanent kernel dimension; 2^24 * 24 updates is seconds
/// of work, anything beyond requires an explicit opt-in.
inline constexpr Index kPermanentDimCap = 24;

/// Exhaustive operator expansion enumerates N^N monomials; 7^7 ~ 823k is the
/// largest desk-scale case.
inline constexpr Index kExpansionDimCap = 7;

/// Default cap for full bosonic output distributions (config count times
/// permanent cost grows fast).
inline constexpr Index kDistributionDimCap = 12;

/// Default cap for single bosonic coincidence probabilities.
inline constexpr Index kCoincidenceDimCap = 16;

/// Default cap for parity sweeps.
inline constexpr Index kSweepDimCap = 16;

/// Cap for the cyclic-symmetry verification chain.
inline constexpr Index kCyclicCheckDimCap = 12;

/// A permanent of an n x n matrix counts as vanishing below this bound;
/// scaled by dimension to cover the summation noise of 2^n compensated
/// additions.
inline double vanishing_tolerance(Index n) {
    return 1e-9 * static_cast<double>(n);
}

// ── Errors ───────────────────────────────────────────────────────────────────

/// Thrown when a matrix fails its unitarity check; carries the max-norm
/// deviation of M†M from the identity.
class NonUnitaryError : public std::invalid_argument {
public:
    NonUnitaryError(const std::string& what, double deviation)
        : std::invalid_argument(what), deviation_(deviation) {}

    double deviation() const { return deviation_; }

private:
    double deviation_;
};

/// Thrown when a requested dimension exceeds the configured cap.
class CapExceededError : public std::invalid_argument {
public:
    CapExceededError(const std::string& what, Index requested, Index cap)
        : std::invalid_argument(what), requested_(requested), cap_(cap) {}

    Index requested() const { return requested_; }
    Index cap() const { return cap_; }

private:
    Index requested_;
    Index cap_;
};

}  // namespace homport
