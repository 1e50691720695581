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

#include "homport/oracle.hpp"

#include <cmath>
#include <utility>

#include "homport/fock.hpp"
#include "homport/parallel.hpp"

namespace homport {

namespace {

struct SortOutcome {
    int swaps = 0;
    bool has_repeat = false;
};

// Stable insertion sort; each performed adjacent swap mirrors one operator
// transposition.
SortOutcome sort_mode_sequence(std::vector<int>& seq) {
    SortOutcome outcome;
    const int n = static_cast<int>(seq.size());
    for (int i = 1; i < n; ++i) {
        for (int k = i; k > 0 && seq[k - 1] > seq[k]; --k) {
            std::swap(seq[k - 1], seq[k]);
            ++outcome.swaps;
        }
    }
    for (int i = 1; i < n; ++i) {
        if (seq[i - 1] == seq[i]) {
            outcome.has_repeat = true;
            break;
        }
    }
    return outcome;
}

using CoefficientMap = std::map<FockConfig, Complex, std::greater<FockConfig>>;

// Expands the monomials indexed by [begin, end) within [0, n^n). Index
// digits in base n pick the output port of each input particle.
void expand_chunk(const ComplexMatrix& u, ParticleStatistics stats, std::uint64_t begin,
                  std::uint64_t end, CoefficientMap& coefficients, std::uint64_t& processed) {
    const Index n = u.rows();
    std::vector<int> ports(static_cast<std::size_t>(n));
    std::vector<int> sorted(static_cast<std::size_t>(n));
    FockConfig config(static_cast<std::size_t>(n));

    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        Complex coeff(1, 0);
        for (Index i = 0; i < n; ++i) {
            const int port = static_cast<int>(rest % static_cast<std::uint64_t>(n));
            rest /= static_cast<std::uint64_t>(n);
            ports[static_cast<std::size_t>(i)] = port;
            coeff *= u(port, i);
        }
        ++processed;

        if (stats == ParticleStatistics::Fermion) {
            sorted = ports;
            const SortOutcome outcome = sort_mode_sequence(sorted);
            if (outcome.has_repeat) {
                // b+ squared vanishes; the monomial contributes nothing.
                continue;
            }
            if (outcome.swaps & 1) {
                coeff = -coeff;
            }
        }

        std::fill(config.begin(), config.end(), 0);
        for (int port : ports) {
            ++config[static_cast<std::size_t>(port)];
        }
        coefficients[config] += coeff;
    }
}

}  // namespace

Complex NormalForm::coefficient(const FockConfig& config) const {
    const auto it = coefficients.find(config);
    return it == coefficients.end() ? Complex(0, 0) : it->second;
}

Complex NormalForm::fock_amplitude(const FockConfig& config) const {
    return coefficient(config) * std::sqrt(occupation_factorial_product(config));
}

NormalForm expand_output_state(const ComplexMatrix& u, ParticleStatistics stats) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw std::invalid_argument("expand_output_state: matrix must be square, dim >= 1");
    }
    const Index n = u.rows();
    if (n > kExpansionDimCap) {
        throw CapExceededError("expand_output_state: dimension exceeds the exhaustive cap", n,
                               kExpansionDimCap);
    }

    std::uint64_t total = 1;
    for (Index i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(n);
    }

    unsigned workers = detail::worker_budget();
    if (total < (std::uint64_t(1) << 14)) {
        workers = 1;
    }
    const auto chunks = detail::split_range(total, workers);
    std::vector<CoefficientMap> maps(chunks.size());
    std::vector<std::uint64_t> counts(chunks.size(), 0);
    detail::run_partitioned(total, workers, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        expand_chunk(u, stats, lo, hi, maps[c], counts[c]);
    });

    NormalForm form;
    form.n = n;
    form.stats = stats;
    // Merge in chunk order so the result is identical at a fixed worker count.
    for (std::size_t c = 0; c < maps.size(); ++c) {
        form.monomial_count += counts[c];
        for (const auto& [config, coeff] : maps[c]) {
            form.coefficients[config] += coeff;
        }
    }
    return form;
}

double coincidence_from_expansion(const ComplexMatrix& u, ParticleStatistics stats) {
    const NormalForm form = expand_output_state(u, stats);
    return std::norm(form.coefficient(coincidence_config(form.n)));
}

int parity_by_adjacent_swaps(std::vector<int> permutation) {
    const SortOutcome outcome = sort_mode_sequence(permutation);
    return (outcome.swaps & 1) ? -1 : 1;
}

int parity_by_cycles(const std::vector<int>& permutation) {
    const int n = static_cast<int>(permutation.size());
    std::vector<bool> seen(permutation.size(), false);
    for (int v : permutation) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("parity_by_cycles: not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    int cycles = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        ++cycles;
        int v = start;
        while (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            v = permutation[static_cast<std::size_t>(v)];
        }
    }
    return ((n - cycles) & 1) ? -1 : 1;
}

}  // namespace homport
