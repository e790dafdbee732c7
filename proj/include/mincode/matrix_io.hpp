#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mincode/errors.hpp"
#include "mincode/linear_code.hpp"

namespace mincode {

// Text format: line 1 = "q k n"; next k lines = n digits in {0,...,q-1},
// optionally space-separated. '#' starts a comment line. LF and CRLF both accepted.

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace detail

inline LinearCode read_matrix(std::istream& in) {
    std::string line;
    if (!detail::next_content_line(in, line))
        throw ParseError("missing header line");
    std::istringstream header(line);
    long q = 0, k = 0, n = 0;
    if (!(header >> q >> k >> n))
        throw ParseError("malformed header, expected 'q k n'");
    std::string trailing;
    if (header >> trailing)
        throw ParseError("trailing tokens after header");
    if (q < 2 || k < 1 || n < 1 || k > n)
        throw ParseError("invalid parameters in header");

    std::vector<Row> rows;
    for (long r = 0; r < k; ++r) {
        if (!detail::next_content_line(in, line))
            throw ParseError("expected " + std::to_string(k) + " matrix rows, got " + std::to_string(r));
        Row row;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch < '0' || ch > '9')
                throw ParseError(std::string("invalid character '") + ch + "' in matrix row");
            const int digit = ch - '0';
            if (digit >= q)
                throw ParseError("digit " + std::to_string(digit) + " out of range for q=" + std::to_string(q));
            row.push_back(static_cast<std::uint8_t>(digit));
        }
        if (static_cast<long>(row.size()) != n)
            throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    return LinearCode(static_cast<int>(q), std::move(rows));
}

inline LinearCode read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const LinearCode& code) {
    out << code.q() << ' ' << code.k() << ' ' << code.n() << '\n';
    for (const Row& row : code.generator()) {
        for (std::uint8_t v : row) out << static_cast<int>(v);
        out << '\n';
    }
}

inline void write_matrix_file(const std::string& path, const LinearCode& code) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_matrix(out, code);
}

} // namespace mincode
