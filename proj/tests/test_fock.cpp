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
#include <cstdlib>
#include <random>

#include "homport/fock.hpp"
#include "homport/matrixfn.hpp"
#include "homport/multiport.hpp"
#include "support/test_helpers.hpp"

using namespace homport;

TEST_CASE("enumerate_configs: worked lists") {
    SUBCASE("two bosons over two ports") {
        const auto configs = enumerate_configs(2, ParticleStatistics::Boson);
        REQUIRE(configs.size() == 3);
        CHECK(configs[0] == FockConfig{2, 0});
        CHECK(configs[1] == FockConfig{1, 1});
        CHECK(configs[2] == FockConfig{0, 2});
    }
    SUBCASE("two fermions over two ports") {
        const auto configs = enumerate_configs(2, ParticleStatistics::Fermion);
        REQUIRE(configs.size() == 1);
        CHECK(configs[0] == FockConfig{1, 1});
    }
    SUBCASE("counts follow stars and bars") {
        CHECK(enumerate_configs(3, ParticleStatistics::Boson).size() == 10);
        CHECK(enumerate_configs(4, ParticleStatistics::Boson).size() == 35);
        CHECK(enumerate_configs(5, ParticleStatistics::Boson).size() == 126);
        CHECK(enumerate_configs(6, ParticleStatistics::Boson).size() == 462);
    }
    SUBCASE("descending lexicographic, duplicate-free, particle-conserving") {
        for (Index n = 1; n <= 6; ++n) {
            const auto configs = enumerate_configs(n, ParticleStatistics::Boson);
            for (std::size_t k = 0; k < configs.size(); ++k) {
                int total = 0;
                for (int occ : configs[k]) {
                    total += occ;
                }
                CHECK(total == n);
                if (k > 0) {
                    CHECK(configs[k - 1] > configs[k]);
                }
            }
        }
    }
    SUBCASE("rejects n=0") {
        CHECK_THROWS_AS(enumerate_configs(0, ParticleStatistics::Boson), std::invalid_argument);
    }
}

TEST_CASE("amplitude: two-particle worked cases") {
    const ComplexMatrix u2 = build_dft(2);
    CHECK(amplitude(u2, {1, 1}, ParticleStatistics::Boson) == Complex(0, 0));
    CHECK(std::abs(amplitude(u2, {2, 0}, ParticleStatistics::Boson) -
                   Complex(1.0 / std::sqrt(2.0), 0.0)) <= 1e-12);
    const Complex fermion_amp = amplitude(u2, {1, 1}, ParticleStatistics::Fermion);
    CHECK(std::abs(std::abs(fermion_amp) - 1.0) <= 1e-12);
    CHECK(std::abs(fermion_amp - determinant(u2)) == 0.0);
}

TEST_CASE("amplitude: input validation") {
    const ComplexMatrix u = build_dft(3);
    CHECK_THROWS_AS(amplitude(u, {1, 1}, ParticleStatistics::Boson), std::invalid_argument);
    CHECK_THROWS_AS(amplitude(u, {2, 1, 0}, ParticleStatistics::Fermion), std::invalid_argument);
    CHECK_THROWS_AS(amplitude(u, {2, 2, 0}, ParticleStatistics::Boson), std::invalid_argument);
    CHECK_THROWS_AS(amplitude(u, {4, 0, -1}, ParticleStatistics::Boson), std::invalid_argument);
    CHECK_THROWS_AS(amplitude(ComplexMatrix::Ones(3, 3), {1, 1, 1}, ParticleStatistics::Boson),
                    NonUnitaryError);
}

TEST_CASE("coincidence_probability: worked values") {
    CHECK(coincidence_probability(build_dft(4), ParticleStatistics::Boson) <= 1e-18);
    CHECK(std::abs(coincidence_probability(build_dft(3), ParticleStatistics::Boson) - 1.0 / 3.0) <=
          1e-10);
    CHECK(std::abs(coincidence_probability(build_dft(7), ParticleStatistics::Fermion) - 1.0) <=
          1e-12);
}

TEST_CASE("coincidence_probability: odd-n values are small but nonzero") {
    // Unnormalized odd-n dft permanents are exact integers (checked against
    // both the naive permutation sum and a long-double Ryser evaluation), so
    // the probabilities are k^2 / n^n.
    struct Known {
        Index n;
        double k;
    };
    for (const Known known : {Known{3, 3}, Known{5, 5}, Known{7, 105}, Known{9, 81},
                              Known{11, 6765}, Known{13, 175747}, Known{15, 30375}}) {
        CAPTURE(known.n);
        const double p = coincidence_probability(build_dft(known.n), ParticleStatistics::Boson);
        const double expected =
            known.k * known.k / std::pow(static_cast<double>(known.n), static_cast<double>(known.n));
        CHECK(p == doctest::Approx(expected).epsilon(1e-6));
        CHECK(p > 0.0);
    }
    for (Index n : {3, 5, 7, 11, 13}) {
        CHECK(coincidence_probability(build_dft(n), ParticleStatistics::Boson) > 1e-4);
    }
    for (Index n = 2; n <= 16; n += 2) {
        CAPTURE(n);
        CHECK(coincidence_probability(build_dft(n), ParticleStatistics::Boson) <= 1e-15);
    }
}

TEST_CASE("coincidence_probability: caps") {
    CHECK_THROWS_AS(coincidence_probability(build_dft(17), ParticleStatistics::Boson),
                    CapExceededError);
    // Fermions ride the determinant and have no cap to hit here.
    CHECK(std::abs(coincidence_probability(build_dft(17), ParticleStatistics::Fermion) - 1.0) <=
          1e-10);
    // Raising the cap makes a larger even port count reachable; its dip is
    // as exact as the in-cap ones.
    CHECK(coincidence_probability(build_dft(18), ParticleStatistics::Boson, 18) <= 1e-15);
}

TEST_CASE("full_distribution: two-particle worked case") {
    const OutputDistribution boson = full_distribution(build_dft(2), ParticleStatistics::Boson);
    REQUIRE(boson.entries.size() == 3);
    CHECK(std::abs(boson.probability({2, 0}) - 0.5) <= 1e-12);
    CHECK(boson.probability({1, 1}) == 0.0);
    CHECK(std::abs(boson.probability({0, 2}) - 0.5) <= 1e-12);

    const OutputDistribution fermion =
        full_distribution(build_dft(2), ParticleStatistics::Fermion);
    REQUIRE(fermion.entries.size() == 1);
    CHECK(std::abs(fermion.probability({1, 1}) - 1.0) <= 1e-12);
}

TEST_CASE("full_distribution: identity does not mix") {
    const OutputDistribution dist =
        full_distribution(ComplexMatrix::Identity(3, 3), ParticleStatistics::Boson);
    CHECK(dist.probability({1, 1, 1}) == 1.0);
    for (const auto& [config, entry] : dist.entries) {
        if (config != FockConfig{1, 1, 1}) {
            CHECK(entry.probability == 0.0);
        }
    }
}

TEST_CASE("full_distribution: three-port dft splits 1/3 coincidence, 2/3 bunched") {
    const OutputDistribution dist = full_distribution(build_dft(3), ParticleStatistics::Boson);
    CHECK(std::abs(dist.probability({1, 1, 1}) - 1.0 / 3.0) <= 1e-10);
    double bunched = 0.0;
    for (const auto& [config, entry] : dist.entries) {
        if (config != FockConfig{1, 1, 1}) {
            bunched += entry.probability;
        }
    }
    CHECK(std::abs(bunched - 2.0 / 3.0) <= 1e-10);
}

TEST_CASE("full_distribution: entries iterate in enumeration order") {
    const auto configs = enumerate_configs(4, ParticleStatistics::Boson);
    const OutputDistribution dist = full_distribution(build_dft(4), ParticleStatistics::Boson);
    REQUIRE(dist.entries.size() == configs.size());
    std::size_t k = 0;
    for (const auto& [config, entry] : dist.entries) {
        CHECK(config == configs[k++]);
    }
}

TEST_CASE("full_distribution: normalization for dft and random unitaries") {
    std::mt19937_64 rng(17);
    for (Index n = 1; n <= 8; ++n) {
        CAPTURE(n);
        for (int rep = 0; rep < 3; ++rep) {
            const ComplexMatrix u = rep == 0 ? ComplexMatrix(build_dft(n))
                                             : testing::random_unitary(n, rng);
            for (auto stats : {ParticleStatistics::Boson, ParticleStatistics::Fermion}) {
                const OutputDistribution dist = full_distribution(u, stats);
                CHECK(std::abs(dist.total_probability() - 1.0) <= 1e-10);
            }
        }
    }
}

TEST_CASE("full_distribution: fermions always land in exactly one configuration") {
    std::mt19937_64 rng(23);
    for (Index n = 1; n <= 8; ++n) {
        const OutputDistribution dist =
            full_distribution(testing::random_unitary(n, rng), ParticleStatistics::Fermion);
        REQUIRE(dist.entries.size() == 1);
        CHECK(std::abs(dist.probability(coincidence_config(n)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("full_distribution: port phases do not move any probability") {
    std::mt19937_64 rng(40);
    for (Index n : {2, 3, 5, 8}) {
        CAPTURE(n);
        const ComplexMatrix u =
            n % 2 ? testing::random_unitary(n, rng) : ComplexMatrix(build_dft(n));
        const ComplexMatrix input_phases = testing::random_phase_diagonal(n, rng);
        const ComplexMatrix output_phases = testing::random_phase_diagonal(n, rng);
        const OutputDistribution base = full_distribution(u, ParticleStatistics::Boson);
        const OutputDistribution right =
            full_distribution(ComplexMatrix(u * input_phases), ParticleStatistics::Boson);
        const OutputDistribution left =
            full_distribution(ComplexMatrix(output_phases * u), ParticleStatistics::Boson);
        for (const auto& [config, entry] : base.entries) {
            CHECK(std::abs(right.probability(config) - entry.probability) <= 1e-12);
            CHECK(std::abs(left.probability(config) - entry.probability) <= 1e-12);
        }
    }
}

TEST_CASE("full_distribution: caps and overrides") {
    CHECK_THROWS_AS(full_distribution(build_dft(13), ParticleStatistics::Boson),
                    CapExceededError);
    CHECK_THROWS_AS(full_distribution(build_dft(4), ParticleStatistics::Boson, 3),
                    CapExceededError);
    CHECK(full_distribution(build_dft(4), ParticleStatistics::Boson, 4).entries.size() == 35);
    // Fermion runs are a single determinant; the bosonic cap does not apply.
    CHECK(full_distribution(build_dft(13), ParticleStatistics::Fermion).entries.size() == 1);
}

TEST_CASE("full_distribution: worker count does not change the result") {
    const ComplexMatrix u = build_dft(6);
    setenv("HOMPORT_THREADS", "1", 1);
    const OutputDistribution serial = full_distribution(u, ParticleStatistics::Boson);
    setenv("HOMPORT_THREADS", "3", 1);
    const OutputDistribution threaded = full_distribution(u, ParticleStatistics::Boson);
    unsetenv("HOMPORT_THREADS");
    REQUIRE(serial.entries.size() == threaded.entries.size());
    for (const auto& [config, entry] : serial.entries) {
        CHECK(threaded.probability(config) == entry.probability);
    }
}

TEST_CASE("occupation_factorial_product") {
    CHECK(occupation_factorial_product({1, 1, 1}) == 1.0);
    CHECK(occupation_factorial_product({3, 0, 0}) == 6.0);
    CHECK(occupation_factorial_product({2, 2, 1, 0}) == 4.0);
}
