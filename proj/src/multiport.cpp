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

#include "homport/multiport.hpp"

#include <string>

namespace homport {

namespace {

void check_port(int port, Index n, const char* what) {
    if (port < 1 || port > n) {
        throw std::invalid_argument(std::string(what) + ": port index " + std::to_string(port) +
                                    " out of range [1, " + std::to_string(n) + "]");
    }
}

}  // namespace

NetworkElement NetworkElement::beam_splitter(int p, int q, const Eigen::Matrix2cd& block) {
    NetworkElement e;
    e.kind = Kind::BeamSplitter;
    e.port_a = p;
    e.port_b = q;
    e.block = block;
    return e;
}

NetworkElement NetworkElement::phase_plate(int p, double phase) {
    NetworkElement e;
    e.kind = Kind::PhasePlate;
    e.port_a = p;
    e.phase = phase;
    return e;
}

Eigen::Matrix2cd balanced_splitter_block() {
    const double s = std::sqrt(0.5);
    Eigen::Matrix2cd h;
    h << Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0);
    return h;
}

ComplexMatrix embed_element(Index n, const NetworkElement& element, double unitary_tol) {
    if (n < 1) {
        throw std::invalid_argument("embed_element: port count must be >= 1");
    }
    ComplexMatrix m = ComplexMatrix::Identity(n, n);
    if (element.kind == NetworkElement::Kind::PhasePlate) {
        check_port(element.port_a, n, "phase plate");
        m(element.port_a - 1, element.port_a - 1) = std::polar(1.0, element.phase);
        return m;
    }
    check_port(element.port_a, n, "beam splitter");
    check_port(element.port_b, n, "beam splitter");
    if (element.port_a == element.port_b) {
        throw std::invalid_argument("beam splitter: ports must be distinct");
    }
    const double dev = unitarity_deviation(element.block);
    if (dev > unitary_tol) {
        throw NonUnitaryError("beam splitter: 2x2 block is not unitary", dev);
    }
    const Index p = element.port_a - 1;
    const Index q = element.port_b - 1;
    m(p, p) = element.block(0, 0);
    m(p, q) = element.block(0, 1);
    m(q, p) = element.block(1, 0);
    m(q, q) = element.block(1, 1);
    return m;
}

ComplexMatrix compose_network(Index n, const std::vector<NetworkElement>& elements,
                              double unitary_tol) {
    if (n < 1) {
        throw std::invalid_argument("compose_network: port count must be >= 1");
    }
    ComplexMatrix acc = ComplexMatrix::Identity(n, n);
    // Elements are physical stages in list order, so each successive stage
    // multiplies on the left.
    for (const NetworkElement& element : elements) {
        acc = embed_element(n, element, unitary_tol) * acc;
    }
    return acc;
}

}  // namespace homport
