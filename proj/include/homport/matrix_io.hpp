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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homport/types.hpp"

namespace homport {

// Matrix text format: first line "N", then N lines of N whitespace-separated
// complex entries rendered as "re+imj". The parser also accepts the pure
// real "re" and pure imaginary "±imj" forms.

/// Raised on malformed matrix text (bad header, bad token, wrong count,
/// non-finite entry).
class MatrixFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips the double (at most 17
/// significant digits).
std::string format_double(double value);

/// "re+imj" / "re-imj"; a zero imaginary part is rendered "+0j".
std::string format_complex(const Complex& value);

/// Parses "re", "re±imj", or "±imj"; rejects NaN/Inf and trailing junk.
Complex parse_complex(std::string_view token);

void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& is);

/// File variants; open failures raise MatrixFormatError with the path.
void save_matrix(const std::string& path, const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::string& path);

}  // namespace homport
