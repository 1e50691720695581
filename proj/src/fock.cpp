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

#include "homport/fock.hpp"

#include <cmath>
#include <string>

#include "homport/matrixfn.hpp"
#include "homport/multiport.hpp"
#include "homport/parallel.hpp"

namespace homport {

namespace {

// Squared moduli are nonnegative up to float noise; anything meaningfully
// negative is an internal error, not an input error.
double clamp_probability(double p) {
    if (p < 0.0) {
        if (p > -1e-12) {
            return 0.0;
        }
        throw std::logic_error("probability below -1e-12: internal error");
    }
    return p;
}

void validate_config(const FockConfig& config, Index n, ParticleStatistics stats) {
    if (static_cast<Index>(config.size()) != n) {
        throw std::invalid_argument("config length " + std::to_string(config.size()) +
                                    " does not match port count " + std::to_string(n));
    }
    long long total = 0;
    for (int occ : config) {
        if (occ < 0) {
            throw std::invalid_argument("occupation numbers must be nonnegative");
        }
        if (stats == ParticleStatistics::Fermion && occ > 1) {
            throw std::invalid_argument("fermion occupation exceeds 1 (Pauli exclusion)");
        }
        total += occ;
    }
    if (total != n) {
        throw std::invalid_argument("occupations must sum to the particle number " +
                                    std::to_string(n));
    }
}

void check_square(const ComplexMatrix& u, const char* what) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square, dim >= 1");
    }
}

void check_unitary(const ComplexMatrix& u, double tol, const char* what) {
    const double dev = unitarity_deviation(u);
    if (!(dev <= tol)) {
        throw NonUnitaryError(std::string(what) + ": matrix fails unitarity check (deviation " +
                                  std::to_string(dev) + ")",
                              dev);
    }
}

// Callers have validated the matrix and the configuration.
Complex amplitude_unchecked(const ComplexMatrix& u, const FockConfig& config,
                            ParticleStatistics stats) {
    if (stats == ParticleStatistics::Fermion) {
        return determinant(u);
    }
    const Complex perm = permanent(SubmatrixSpec{u, config}, u.rows());
    return perm / std::sqrt(occupation_factorial_product(config));
}

void emit_compositions(std::vector<FockConfig>& out, FockConfig& prefix, int remaining,
                       Index parts_left) {
    if (parts_left == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        emit_compositions(out, prefix, remaining - v, parts_left - 1);
        prefix.pop_back();
    }
}

}  // namespace

double OutputDistribution::total_probability() const {
    detail::CompensatedSum<double> sum;
    for (const auto& [config, entry] : entries) {
        sum.add(entry.probability);
    }
    return sum.sum;
}

double OutputDistribution::probability(const FockConfig& config) const {
    const auto it = entries.find(config);
    return it == entries.end() ? 0.0 : it->second.probability;
}

FockConfig coincidence_config(Index n) {
    return FockConfig(static_cast<std::size_t>(n), 1);
}

std::vector<FockConfig> enumerate_configs(Index n, ParticleStatistics stats) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_configs: port count must be >= 1");
    }
    if (stats == ParticleStatistics::Fermion) {
        return {coincidence_config(n)};
    }
    // C(2n-1, n-1) weak compositions of n into n parts.
    double count = 1.0;
    for (Index k = 1; k < n; ++k) {
        count *= static_cast<double>(n + k) / static_cast<double>(k);
    }
    std::vector<FockConfig> out;
    if (count < 1e8) {
        out.reserve(static_cast<std::size_t>(count + 0.5));
    }
    FockConfig prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    emit_compositions(out, prefix, static_cast<int>(n), n);
    return out;
}

double occupation_factorial_product(const FockConfig& config) {
    double product = 1.0;
    for (int occ : config) {
        for (int k = 2; k <= occ; ++k) {
            product *= k;
        }
    }
    return product;
}

Complex amplitude(const ComplexMatrix& u, const FockConfig& config, ParticleStatistics stats,
                  double unitary_tol) {
    check_square(u, "amplitude");
    validate_config(config, u.rows(), stats);
    check_unitary(u, unitary_tol, "amplitude");
    return amplitude_unchecked(u, config, stats);
}

double coincidence_probability(const ComplexMatrix& u, ParticleStatistics stats, Index dim_cap,
                               double unitary_tol) {
    check_square(u, "coincidence_probability");
    if (stats == ParticleStatistics::Boson && u.rows() > dim_cap) {
        throw CapExceededError("coincidence_probability: dimension exceeds cap", u.rows(),
                               dim_cap);
    }
    check_unitary(u, unitary_tol, "coincidence_probability");
    const Complex amp = amplitude_unchecked(u, coincidence_config(u.rows()), stats);
    return clamp_probability(std::norm(amp));
}

OutputDistribution full_distribution(const ComplexMatrix& u, ParticleStatistics stats,
                                     Index dim_cap, double unitary_tol) {
    check_square(u, "full_distribution");
    const Index n = u.rows();
    if (stats == ParticleStatistics::Boson && n > dim_cap) {
        throw CapExceededError("full_distribution: dimension exceeds cap", n, dim_cap);
    }
    check_unitary(u, unitary_tol, "full_distribution");

    const std::vector<FockConfig> configs = enumerate_configs(n, stats);
    std::vector<Complex> amps(configs.size());

    // Independent evaluations; the assembly below fixes the output order, so
    // the distribution is identical however the work was split.
    unsigned workers = detail::worker_budget();
    if (configs.size() < 64) {
        workers = 1;
    }
    detail::run_partitioned(configs.size(), workers,
                            [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
                                for (std::uint64_t k = lo; k < hi; ++k) {
                                    amps[k] = amplitude_unchecked(u, configs[k], stats);
                                }
                            });

    OutputDistribution dist;
    dist.n = n;
    dist.stats = stats;
    for (std::size_t k = 0; k < configs.size(); ++k) {
        const double p = clamp_probability(std::norm(amps[k]));
        dist.entries.emplace_hint(dist.entries.end(), configs[k], DistributionEntry{amps[k], p});
    }
    return dist;
}

}  // namespace homport
