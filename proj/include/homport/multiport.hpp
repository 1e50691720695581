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

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "homport/types.hpp"

namespace homport {

namespace detail {

/// omega_n^k with the exponent reduced mod n and quarter turns evaluated
/// exactly, so DFT entries at n = 1, 2, 4 carry no rounding at all and large
/// exponents lose no precision. omega_n = e^{2*pi*i/n}.
template <typename Scalar>
std::complex<Scalar> root_of_unity(Index n, std::uint64_t exponent) {
    const std::uint64_t k = exponent % static_cast<std::uint64_t>(n);
    const std::uint64_t quarter = 4 * k;
    const auto un = static_cast<std::uint64_t>(n);
    if (k == 0) {
        return {Scalar(1), Scalar(0)};
    }
    if (quarter == un) {
        return {Scalar(0), Scalar(1)};
    }
    if (quarter == 2 * un) {
        return {Scalar(-1), Scalar(0)};
    }
    if (quarter == 3 * un) {
        return {Scalar(0), Scalar(-1)};
    }
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * static_cast<Scalar>(k) /
                         static_cast<Scalar>(n);
    return std::polar(Scalar(1), angle);
}

}  // namespace detail

/// Transition matrix of the symmetric n-port Bell multiport: the discrete
/// Fourier transform U(j,i) = omega_n^{(j-1)(i-1)} / sqrt(n). Unitary and
/// symmetric; every input is routed to every output with probability 1/n.
template <typename Scalar = Real>
DenseMatrix<Scalar> build_dft(Index n) {
    if (n < 1) {
        throw std::invalid_argument("build_dft: port count must be >= 1");
    }
    // sqrt(1/n) rather than 1/sqrt(n): exact 1/sqrt(2) for the Hadamard case.
    const Scalar scale = std::sqrt(Scalar(1) / static_cast<Scalar>(n));
    DenseMatrix<Scalar> u(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            u(j, i) = scale * detail::root_of_unity<Scalar>(
                                  n, static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(i));
        }
    }
    return u;
}

/// Diagonal phase matrix diag(1, omega_n, omega_n^2, ...). Left-multiplying
/// the DFT matrix by it cycles the DFT's columns.
template <typename Scalar = Real>
DenseMatrix<Scalar> build_lambda(Index n) {
    if (n < 1) {
        throw std::invalid_argument("build_lambda: port count must be >= 1");
    }
    DenseMatrix<Scalar> lambda = DenseMatrix<Scalar>::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        lambda(j, j) = detail::root_of_unity<Scalar>(n, static_cast<std::uint64_t>(j));
    }
    return lambda;
}

/// Max-norm of M†M - I; +inf for non-square input.
template <typename Derived>
double unitarity_deviation(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const Index n = m.rows();
    using Plain = typename Derived::PlainObject;
    const Plain gram = m.adjoint() * m - Plain::Identity(n, n);
    return static_cast<double>(gram.cwiseAbs().maxCoeff());
}

/// True iff the max-norm of M†M - I is within tol. Norm conservation of the
/// scattered state rests on this, so every physics entry point checks it.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kUnitaryTol) {
    return unitarity_deviation(m) <= tol;
}

/// One stage of a multiport network: a two-port beam splitter or a one-port
/// phase plate, embedded into the identity on the remaining ports.
struct NetworkElement {
    enum class Kind { BeamSplitter, PhasePlate };

    Kind kind = Kind::PhasePlate;
    int port_a = 1;                                           // 1-based port index
    int port_b = 1;                                           // second port, beam splitters only
    Eigen::Matrix2cd block = Eigen::Matrix2cd::Identity();    // 2x2 unitary, beam splitters only
    double phase = 0.0;                                       // radians, phase plates only

    static NetworkElement beam_splitter(int p, int q, const Eigen::Matrix2cd& block);
    static NetworkElement phase_plate(int p, double phase);
};

/// The 50:50 block (1/sqrt(2)) [[1, 1], [1, -1]]; equals build_dft(2).
Eigen::Matrix2cd balanced_splitter_block();

/// Embeds `element` into the n x n identity.
ComplexMatrix embed_element(Index n, const NetworkElement& element, double unitary_tol = kUnitaryTol);

/// Product of the elements embedded into the n x n identity, applied in list
/// order as physical stages: later elements multiply on the left. The empty
/// network is the identity. Unitary whenever every element is.
ComplexMatrix compose_network(Index n, const std::vector<NetworkElement>& elements,
                              double unitary_tol = kUnitaryTol);

}  // namespace homport
