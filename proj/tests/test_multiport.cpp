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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "homport/matrix_io.hpp"
#include "homport/multiport.hpp"
#include "support/test_helpers.hpp"

using namespace homport;

TEST_CASE("dft matrix: worked entries") {
    SUBCASE("n=2 is the Hadamard matrix") {
        const ComplexMatrix u = build_dft(2);
        const double s = std::sqrt(0.5);
        CHECK(u(0, 0) == Complex(s, 0));
        CHECK(u(0, 1) == Complex(s, 0));
        CHECK(u(1, 0) == Complex(s, 0));
        CHECK(u(1, 1) == Complex(-s, 0));
    }
    SUBCASE("n=1 is the single-port identity") {
        const ComplexMatrix u = build_dft(1);
        REQUIRE(u.rows() == 1);
        CHECK(u(0, 0) == Complex(1, 0));
    }
    SUBCASE("n=3, second row walks the cube roots of unity") {
        const ComplexMatrix u = build_dft(3);
        const double s = std::sqrt(1.0 / 3.0);
        const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        CHECK(std::abs(u(1, 0) - s) <= 1e-15);
        CHECK(std::abs(u(1, 1) - s * w) <= 1e-15);
        CHECK(std::abs(u(1, 2) - s * w * w) <= 2e-15);
    }
    SUBCASE("rejects n=0") {
        CHECK_THROWS_AS(build_dft(0), std::invalid_argument);
    }
}

TEST_CASE("dft matrix: unitary and symmetric up to n=16") {
    for (Index n = 1; n <= 16; ++n) {
        const ComplexMatrix u = build_dft(n);
        CAPTURE(n);
        CHECK(is_unitary(u, 1e-12));
        CHECK(testing::max_entry_distance(u, u.transpose()) <= 1e-15);
    }
}

TEST_CASE("lambda matrix: diagonal of root-of-unity powers") {
    SUBCASE("n=2") {
        const ComplexMatrix l = build_lambda(2);
        CHECK(l(0, 0) == Complex(1, 0));
        CHECK(l(1, 1) == Complex(-1, 0));
        CHECK(l(0, 1) == Complex(0, 0));
    }
    SUBCASE("n=1") {
        CHECK(build_lambda(1)(0, 0) == Complex(1, 0));
    }
    SUBCASE("n=4 gives diag(1, i, -1, -i) exactly") {
        const ComplexMatrix l = build_lambda(4);
        CHECK(l(0, 0) == Complex(1, 0));
        CHECK(l(1, 1) == Complex(0, 1));
        CHECK(l(2, 2) == Complex(-1, 0));
        CHECK(l(3, 3) == Complex(0, -1));
    }
    SUBCASE("unitary for n <= 16") {
        for (Index n = 1; n <= 16; ++n) {
            CHECK(is_unitary(build_lambda(n), 1e-12));
        }
    }
    SUBCASE("rejects n=0") {
        CHECK_THROWS_AS(build_lambda(0), std::invalid_argument);
    }
}

TEST_CASE("lambda * dft cycles the dft columns") {
    for (Index n = 1; n <= 16; ++n) {
        const ComplexMatrix u = build_dft(n);
        const ComplexMatrix lu = build_lambda(n) * u;
        ComplexMatrix cycled(n, n);
        for (Index i = 0; i < n; ++i) {
            cycled.col(i) = u.col((i + 1) % n);
        }
        CAPTURE(n);
        CHECK(testing::max_entry_distance(lu, cycled) <= 1e-15);
    }
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(build_dft(5), 1e-12));
    CHECK_FALSE(is_unitary(ComplexMatrix::Ones(2, 2), 1e-12));

    ComplexMatrix perturbed = build_dft(8);
    perturbed(3, 5) += Complex(1e-6, 0);
    CHECK_FALSE(is_unitary(perturbed, 1e-12));

    CHECK_FALSE(is_unitary(ComplexMatrix::Ones(2, 3), 1e-12));
    CHECK(unitarity_deviation(build_dft(6)) <= 1e-14);
}

TEST_CASE("compose_network: embedding and ordering") {
    SUBCASE("empty network is the identity") {
        const ComplexMatrix m = compose_network(3, {});
        CHECK(testing::max_entry_distance(m, ComplexMatrix::Identity(3, 3)) == 0.0);
    }
    SUBCASE("single balanced splitter on two ports equals the 2-port dft") {
        const auto e = NetworkElement::beam_splitter(1, 2, balanced_splitter_block());
        CHECK(testing::max_entry_distance(compose_network(2, {e}), build_dft(2)) == 0.0);
    }
    SUBCASE("later elements multiply on the left") {
        // A phase on port 1 after the splitter scales the first *row*.
        const auto bs = NetworkElement::beam_splitter(1, 2, balanced_splitter_block());
        const auto pp = NetworkElement::phase_plate(1, std::numbers::pi);
        const ComplexMatrix m = compose_network(2, {bs, pp});
        const ComplexMatrix u = build_dft(2);
        CHECK(std::abs(m(0, 0) + u(0, 0)) <= 1e-15);
        CHECK(std::abs(m(1, 0) - u(1, 0)) <= 1e-15);
    }
    SUBCASE("balanced 4-port pyramid has all moduli 1/2") {
        // Two splitter layers (1,2)+(3,4) then (1,3)+(2,4) spread each input
        // evenly over all outputs; phase plates keep the moduli untouched.
        const Eigen::Matrix2cd h = balanced_splitter_block();
        const std::vector<NetworkElement> pyramid = {
            NetworkElement::phase_plate(2, std::numbers::pi / 2.0),
            NetworkElement::beam_splitter(1, 2, h),
            NetworkElement::beam_splitter(3, 4, h),
            NetworkElement::beam_splitter(1, 3, h),
            NetworkElement::beam_splitter(2, 4, h),
            NetworkElement::phase_plate(4, 0.3),
        };
        const ComplexMatrix m = compose_network(4, pyramid);
        CHECK(is_unitary(m, 1e-12));
        for (Index j = 0; j < 4; ++j) {
            for (Index i = 0; i < 4; ++i) {
                CHECK(std::abs(std::abs(m(j, i)) - 0.5) <= 1e-14);
            }
        }
    }
}

TEST_CASE("compose_network: thirty random unitary stages stay unitary") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> port(1, 6);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    std::vector<NetworkElement> elements;
    for (int k = 0; k < 30; ++k) {
        if (k % 3 == 2) {
            elements.push_back(NetworkElement::phase_plate(port(rng), angle(rng)));
            continue;
        }
        int p = port(rng);
        int q = port(rng);
        while (q == p) {
            q = port(rng);
        }
        elements.push_back(NetworkElement::beam_splitter(p, q, testing::random_unitary(2, rng)));
    }
    CHECK(is_unitary(compose_network(6, elements), 1e-12));
}

TEST_CASE("compose_network: rejects bad elements") {
    const Eigen::Matrix2cd h = balanced_splitter_block();
    CHECK_THROWS_AS(compose_network(3, {NetworkElement::beam_splitter(1, 4, h)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_network(3, {NetworkElement::beam_splitter(0, 2, h)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_network(3, {NetworkElement::beam_splitter(2, 2, h)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_network(3, {NetworkElement::phase_plate(5, 0.1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_network(0, {}), std::invalid_argument);

    Eigen::Matrix2cd bad = h;
    bad(0, 0) = Complex(0.9, 0);
    CHECK_THROWS_AS(compose_network(2, {NetworkElement::beam_splitter(1, 2, bad)}),
                    NonUnitaryError);
}

TEST_CASE("matrix text format") {
    SUBCASE("write/read round trip is bit exact") {
        std::mt19937_64 rng(12);
        for (Index n : {1, 2, 5, 8}) {
            ComplexMatrix m =
                n % 2 ? testing::random_gaussian_matrix(n, rng) : ComplexMatrix(build_dft(n));
            std::stringstream ss;
            write_matrix(ss, m);
            const ComplexMatrix back = read_matrix(ss);
            REQUIRE(back.rows() == n);
            CHECK(testing::max_entry_distance(m, back) == 0.0);
        }
    }
    SUBCASE("parser accepts the three token forms") {
        CHECK(parse_complex("2.5") == Complex(2.5, 0));
        CHECK(parse_complex("-3") == Complex(-3, 0));
        CHECK(parse_complex("1+0j") == Complex(1, 0));
        CHECK(parse_complex("0.5-0.25j") == Complex(0.5, -0.25));
        CHECK(parse_complex("-0.5j") == Complex(0, -0.5));
        CHECK(parse_complex("+0.5j") == Complex(0, 0.5));
        CHECK(parse_complex("1e-5-2e-7j") == Complex(1e-5, -2e-7));
        CHECK(parse_complex("1.5e+3") == Complex(1500, 0));
    }
    SUBCASE("parser rejects junk") {
        CHECK_THROWS_AS(parse_complex(""), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("j"), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("1+2"), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("abc"), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("1+j2"), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("nan"), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("infj"), MatrixFormatError);
        CHECK_THROWS_AS(parse_complex("1x+2j"), MatrixFormatError);
    }
    SUBCASE("reader rejects malformed files") {
        std::stringstream no_header("x");
        CHECK_THROWS_AS(read_matrix(no_header), MatrixFormatError);
        std::stringstream bad_dim("0\n");
        CHECK_THROWS_AS(read_matrix(bad_dim), MatrixFormatError);
        std::stringstream truncated("2\n1+0j 2+0j\n3+0j\n");
        CHECK_THROWS_AS(read_matrix(truncated), MatrixFormatError);
    }
    SUBCASE("formatting follows the shortest round-trip rule") {
        CHECK(format_double(1.0) == "1");
        CHECK(format_double(0.0) == "0");
        CHECK(format_double(std::sqrt(0.5)) == "0.7071067811865476");
        CHECK(format_complex(Complex(1, 0)) == "1+0j");
        CHECK(format_complex(Complex(0, -0.5)) == "0-0.5j");
        CHECK(format_complex(Complex(-1, 1e-16)) == "-1+1e-16j");
    }
}
