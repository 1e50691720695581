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

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "homport/parallel.hpp"
#include "homport/types.hpp"

namespace homport {

namespace detail {

/// Kahan-compensated accumulator; componentwise exact for std::complex.
template <typename Scalar>
struct CompensatedSum {
    Scalar sum{};
    Scalar carry{};

    void add(const Scalar& value) {
        const Scalar y = value - carry;
        const Scalar t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/// Ryser inclusion-exclusion over the column subsets indexed by
/// [begin, end) within [1, 2^n), walked in Gray-code order so each step
/// updates the running row sums by a single column. Returns
/// sum_{k in chunk} (-1)^{popcount(gray(k))} prod_i x_i(gray(k)); the caller
/// applies the global (-1)^n factor.
template <typename Matrix>
typename Matrix::Scalar ryser_chunk(const Matrix& a, std::uint64_t begin, std::uint64_t end) {
    using Scalar = typename Matrix::Scalar;
    const Index n = a.rows();

    Eigen::Vector<Scalar, Eigen::Dynamic> x = Eigen::Vector<Scalar, Eigen::Dynamic>::Zero(n);
    std::uint64_t gray = (begin - 1) ^ ((begin - 1) >> 1);
    for (Index j = 0; j < n; ++j) {
        if ((gray >> j) & 1u) {
            x += a.col(j);
        }
    }
    bool odd = std::popcount(gray) & 1u;

    CompensatedSum<Scalar> acc;
    for (std::uint64_t k = begin; k < end; ++k) {
        const int bit = std::countr_zero(k);
        const std::uint64_t mask = std::uint64_t(1) << bit;
        gray ^= mask;
        if (gray & mask) {
            x += a.col(bit);
        } else {
            x -= a.col(bit);
        }
        odd = !odd;
        const Scalar term = x.prod();
        acc.add(odd ? -term : term);
    }
    return acc.sum;
}

/// Partitioned Ryser sum; chunk results are reduced in chunk order, so the
/// value is bit-stable across runs at a fixed worker count.
template <typename Matrix>
typename Matrix::Scalar permanent_partitioned(const Matrix& a, unsigned workers) {
    using Scalar = typename Matrix::Scalar;
    const Index n = a.rows();
    const std::uint64_t subsets = (std::uint64_t(1) << n) - 1;

    std::vector<Scalar> partial(std::max<unsigned>(workers, 1));
    run_partitioned(subsets, workers, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
        partial[chunk] = ryser_chunk(a, lo + 1, hi + 1);
    });

    CompensatedSum<Scalar> total;
    for (const Scalar& p : partial) {
        total.add(p);
    }
    return (n & 1) ? -total.sum : total.sum;
}

}  // namespace detail

/// Subset count above which the Ryser loop is worth spreading over threads.
inline constexpr std::uint64_t kPermanentParallelMinSubsets = std::uint64_t(1) << 16;

/// Permanent of a square matrix: sum over all n! permutations s of
/// prod_i M(s(i), i), evaluated by Ryser inclusion-exclusion with Gray-code
/// subset updates in O(2^n * n) arithmetic. The outer sum is compensated;
/// the even-n Bell multiport permanent is an exact cancellation and plain
/// summation noise would mask it at larger n.
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& m,
                                   Index dim_cap = kPermanentDimCap) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("permanent: matrix must be square, dim >= 1");
    }
    if (m.rows() > dim_cap) {
        throw CapExceededError("permanent: dimension exceeds cap; pass a larger cap to opt in",
                               m.rows(), dim_cap);
    }
    if (m.rows() > 62) {
        // The subset index must fit a 64-bit word; 2^62 updates are out of
        // reach regardless.
        throw CapExceededError("permanent: dimension exceeds the 62-bit subset space", m.rows(),
                               62);
    }
    const typename Derived::PlainObject a = m.derived();
    const std::uint64_t subsets = (std::uint64_t(1) << a.rows()) - 1;
    unsigned workers = detail::worker_budget();
    if (subsets < kPermanentParallelMinSubsets) {
        workers = 1;
    }
    return detail::permanent_partitioned(a, workers);
}

/// Determinant via partially pivoted elimination. The signed permutation sum
/// it equals is kept as a test oracle only.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("determinant: matrix must be square, dim >= 1");
    }
    using Plain = typename Derived::PlainObject;
    return Eigen::PartialPivLU<Plain>(m.derived()).determinant();
}

/// Row-repeated square submatrix of a base matrix: row j appears
/// row_multiplicities[j] times (zero drops it), all columns kept. The
/// multiplicities must sum to the base dimension.
struct SubmatrixSpec {
    ComplexMatrix base;
    std::vector<int> row_multiplicities;
};

/// Materializes the row-repeated matrix described by `spec`.
ComplexMatrix repeated_row_matrix(const SubmatrixSpec& spec);

/// Permanent of the row-repeated matrix; equals permanent(base) when every
/// multiplicity is 1.
Complex permanent(const SubmatrixSpec& spec, Index dim_cap = kPermanentDimCap);

/// perm(Lambda_n) in closed form: omega_n^{n(n+1)/2} = e^{i*pi*(n+1)}, i.e.
/// +1 for odd n and -1 for even n. Cross-checked against the Ryser kernel on
/// build_lambda(n) whenever n is within the kernel cap.
Complex lambda_permanent(Index n);

/// A permanent counts as vanishing when its modulus is at or below the
/// dimension-scaled tolerance shared with the dip reports.
inline bool is_vanishing(const Complex& value, Index n) {
    return std::abs(value) <= vanishing_tolerance(n);
}

}  // namespace homport
