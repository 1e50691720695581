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

#include "homport/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace homport {

namespace {

double parse_finite_double(std::string_view text, std::string_view token) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
        throw MatrixFormatError("bad complex entry '" + std::string(token) + "'");
    }
    return value;
}

// Index of the sign that separates the real from the imaginary part, or
// npos. Signs opening the token or following an exponent marker do not
// separate anything.
std::size_t separator_position(std::string_view body) {
    std::size_t pos = std::string_view::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            pos = i;
        }
    }
    return pos;
}

}  // namespace

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

std::string format_complex(const Complex& value) {
    std::string out = format_double(value.real());
    const double im = value.imag();
    if (im == 0.0) {
        out += "+0j";
        return out;
    }
    if (im > 0.0) {
        out += '+';
    }
    out += format_double(im);
    out += 'j';
    return out;
}

Complex parse_complex(std::string_view token) {
    if (token.empty()) {
        throw MatrixFormatError("empty complex entry");
    }
    if (token.back() != 'j') {
        // Pure real; a stray separator means two numbers were glued together
        // without the imaginary marker.
        if (separator_position(token) != std::string_view::npos) {
            throw MatrixFormatError("bad complex entry '" + std::string(token) + "'");
        }
        return {parse_finite_double(token, token), 0.0};
    }
    const std::string_view body = token.substr(0, token.size() - 1);
    if (body.empty()) {
        throw MatrixFormatError("bad complex entry '" + std::string(token) + "'");
    }
    const std::size_t sep = separator_position(body);
    if (sep == std::string_view::npos) {
        return {0.0, parse_finite_double(body, token)};
    }
    return {parse_finite_double(body.substr(0, sep), token),
            parse_finite_double(body.substr(sep), token)};
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
    os << m.rows() << '\n';
    for (Index j = 0; j < m.rows(); ++j) {
        for (Index i = 0; i < m.cols(); ++i) {
            if (i > 0) {
                os << ' ';
            }
            os << format_complex(m(j, i));
        }
        os << '\n';
    }
}

ComplexMatrix read_matrix(std::istream& is) {
    long long n = 0;
    if (!(is >> n)) {
        throw MatrixFormatError("matrix header: expected the dimension N");
    }
    if (n < 1 || n > 10000) {
        throw MatrixFormatError("matrix header: dimension " + std::to_string(n) +
                                " out of range [1, 10000]");
    }
    ComplexMatrix m(n, n);
    std::string token;
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            if (!(is >> token)) {
                throw MatrixFormatError("matrix body: expected " + std::to_string(n * n) +
                                        " entries");
            }
            m(j, i) = parse_complex(token);
        }
    }
    return m;
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream os(path);
    if (!os) {
        throw MatrixFormatError("cannot open '" + path + "' for writing");
    }
    write_matrix(os, m);
    os.flush();
    if (!os) {
        throw MatrixFormatError("write to '" + path + "' failed");
    }
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw MatrixFormatError("cannot open '" + path + "' for reading");
    }
    return read_matrix(is);
}

}  // namespace homport
