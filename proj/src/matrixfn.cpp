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

#include "homport/matrixfn.hpp"

#include <numeric>
#include <string>

#include "homport/multiport.hpp"

namespace homport {

ComplexMatrix repeated_row_matrix(const SubmatrixSpec& spec) {
    const Index n = spec.base.rows();
    if (spec.base.cols() != n || n < 1) {
        throw std::invalid_argument("repeated_row_matrix: base must be square, dim >= 1");
    }
    if (static_cast<Index>(spec.row_multiplicities.size()) != n) {
        throw std::invalid_argument("repeated_row_matrix: need one multiplicity per row");
    }
    long long total = 0;
    for (int mult : spec.row_multiplicities) {
        if (mult < 0) {
            throw std::invalid_argument("repeated_row_matrix: negative multiplicity");
        }
        total += mult;
    }
    if (total != n) {
        throw std::invalid_argument("repeated_row_matrix: multiplicities must sum to " +
                                    std::to_string(n) + ", got " + std::to_string(total));
    }
    ComplexMatrix out(n, n);
    Index r = 0;
    for (Index j = 0; j < n; ++j) {
        for (int copy = 0; copy < spec.row_multiplicities[j]; ++copy) {
            out.row(r++) = spec.base.row(j);
        }
    }
    return out;
}

Complex permanent(const SubmatrixSpec& spec, Index dim_cap) {
    return permanent(repeated_row_matrix(spec), dim_cap);
}

Complex lambda_permanent(Index n) {
    if (n < 1) {
        throw std::invalid_argument("lambda_permanent: n must be >= 1");
    }
    // omega_n^{n(n+1)/2} = e^{i*pi*(n+1)}: +1 for odd n, -1 for even n.
    const Complex closed_form = (n % 2 == 1) ? Complex(1, 0) : Complex(-1, 0);
    if (n <= kPermanentDimCap) {
        const Complex kernel_value = permanent(build_lambda(n));
        if (std::abs(kernel_value - closed_form) > 1e-12) {
            throw std::logic_error("lambda_permanent: kernel disagrees with closed form at n = " +
                                   std::to_string(n));
        }
    }
    return closed_form;
}

}  // namespace homport
