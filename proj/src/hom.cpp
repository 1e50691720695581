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

#include "homport/hom.hpp"

#include <cmath>
#include <string>

#include "homport/matrixfn.hpp"
#include "homport/multiport.hpp"

namespace homport {

namespace {

void check_unitary(const ComplexMatrix& u, double tol, const char* what) {
    const double dev = unitarity_deviation(u);
    if (!(dev <= tol)) {
        throw NonUnitaryError(std::string(what) + ": matrix fails unitarity check (deviation " +
                                  std::to_string(dev) + ")",
                              dev);
    }
}

}  // namespace

DipReport dip_report(const ComplexMatrix& u, ParticleStatistics stats, Index dim_cap,
                     double unitary_tol) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw std::invalid_argument("dip_report: matrix must be square, dim >= 1");
    }
    const Index n = u.rows();
    if (stats == ParticleStatistics::Boson && n > dim_cap) {
        throw CapExceededError("dip_report: dimension exceeds cap", n, dim_cap);
    }
    check_unitary(u, unitary_tol, "dip_report");

    DipReport report;
    report.n = n;
    report.stats = stats;
    report.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
    report.matrix_function =
        stats == ParticleStatistics::Boson ? permanent(u, n) : determinant(u);
    report.coincidence_probability = std::norm(report.matrix_function);
    // Dip means the matrix function itself vanishes. The probability is its
    // square and can undershoot the threshold for genuinely nonzero odd-n
    // permanents (|perm| ~ 4.6e-5 at n = 15).
    report.is_dip = is_vanishing(report.matrix_function, n);
    return report;
}

std::vector<DipReport> parity_sweep(int n_min, int n_max, ParticleStatistics stats, Index cap) {
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("parity_sweep: need 1 <= n_min <= n_max");
    }
    if (n_max > cap) {
        throw std::invalid_argument("parity_sweep: n_max " + std::to_string(n_max) +
                                    " exceeds cap " + std::to_string(cap));
    }
    std::vector<DipReport> reports;
    reports.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        reports.push_back(dip_report(build_dft(n), stats, n));
    }
    return reports;
}

CyclicSymmetryReport verify_cyclic_symmetry(Index n) {
    if (n < 1) {
        throw std::invalid_argument("verify_cyclic_symmetry: n must be >= 1");
    }
    if (n > kCyclicCheckDimCap) {
        throw CapExceededError("verify_cyclic_symmetry: n exceeds cap", n, kCyclicCheckDimCap);
    }

    const ComplexMatrix u = build_dft(n);
    const ComplexMatrix lambda = build_lambda(n);
    const ComplexMatrix lambda_u = lambda * u;

    // Left-multiplying by Lambda cycles the columns: column i picks up
    // column (i+1) mod n of U.
    ComplexMatrix cycled(n, n);
    for (Index i = 0; i < n; ++i) {
        cycled.col(i) = u.col((i + 1) % n);
    }

    CyclicSymmetryReport report;
    report.n = n;
    report.column_cycle_deviation = (lambda_u - cycled).cwiseAbs().maxCoeff();

    const Complex perm_u = permanent(u);
    const Complex perm_lambda = permanent(lambda);
    const Complex perm_lambda_u = permanent(lambda_u);
    report.lambda_permanent_value = perm_lambda;
    report.multiplicativity_deviation = std::abs(perm_lambda_u - perm_lambda * perm_u);
    report.parity_deviation = std::abs(perm_lambda - lambda_permanent(n));

    report.passed = report.column_cycle_deviation <= kCycleEntryTol &&
                    report.multiplicativity_deviation <= kPermanentIdentityTol &&
                    report.parity_deviation <= kPermanentIdentityTol;
    return report;
}

StatisticsVerdict discriminate_statistics(const ComplexMatrix& u, double observed_coincidence,
                                          double tol, Index dim_cap, double unitary_tol) {
    if (!(observed_coincidence >= 0.0 && observed_coincidence <= 1.0)) {
        throw std::invalid_argument("discriminate_statistics: probability must lie in [0, 1]");
    }
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("discriminate_statistics: tolerance must be nonnegative");
    }
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw std::invalid_argument("discriminate_statistics: matrix must be square, dim >= 1");
    }
    check_unitary(u, unitary_tol, "discriminate_statistics");

    const double boson_prediction = std::norm(permanent(u, dim_cap));
    const double fermion_prediction = 1.0;
    const bool boson_match = std::abs(observed_coincidence - boson_prediction) <= tol;
    const bool fermion_match = std::abs(observed_coincidence - fermion_prediction) <= tol;
    if (boson_match == fermion_match) {
        return StatisticsVerdict::Inconclusive;
    }
    return boson_match ? StatisticsVerdict::ConsistentWithBoson
                       : StatisticsVerdict::ConsistentWithFermion;
}

}  // namespace homport
