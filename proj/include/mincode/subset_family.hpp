#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "mincode/errors.hpp"
#include "mincode/linear_code.hpp"

namespace mincode {

/// Rows of the right block P of a [3N, N+1] standard-form generator, as
/// N-subsets of {1,...,2N-1}. Element e is bit e-1 of a mask.
struct SubsetFamily {
    int N = 0;
    std::vector<std::uint32_t> rows;

    std::uint32_t ground_mask() const { return (std::uint32_t{1} << (2 * N - 1)) - 1; }
};

/// Pairwise intersection window (N-1)/2 <= |P_i ^ P_j| <= (N+1)/2, and for a
/// complete family (N+1 rows) the symmetric difference of all rows is empty.
inline bool family_window_check(const SubsetFamily& fam) {
    const int n_rows = static_cast<int>(fam.rows.size());
    for (int i = 0; i < n_rows; ++i) {
        for (int j = i + 1; j < n_rows; ++j) {
            const int inter = std::popcount(fam.rows[i] & fam.rows[j]);
            if (2 * inter < fam.N - 1 || 2 * inter > fam.N + 1) return false;
        }
    }
    if (n_rows == fam.N + 1) {
        std::uint32_t total = 0;
        for (std::uint32_t r : fam.rows) total ^= r;
        if (total != 0) return false;
    }
    return true;
}

/// Intersection counts of a candidate subset with the four blocks cut out by
/// a pair of rows: P1\P2, P1^P2, P2\P1, and the complement of P1|P2.
struct AbcdSplit {
    int a = 0, b = 0, c = 0, d = 0;
};

inline AbcdSplit abcd_split(std::uint32_t I, std::uint32_t P1, std::uint32_t P2, int N) {
    if (N % 2 != 0 || std::popcount(P1 & P2) != N / 2)
        throw BlockMismatch("abcd_split requires N even and |P1 ^ P2| = N/2");
    const std::uint32_t ground = (std::uint32_t{1} << (2 * N - 1)) - 1;
    AbcdSplit s;
    s.a = std::popcount(I & P1 & ~P2);
    s.b = std::popcount(I & P1 & P2);
    s.c = std::popcount(I & P2 & ~P1);
    s.d = std::popcount(I & ground & ~(P1 | P2));
    return s;
}

/// Necessary shape of any further row relative to a half-overlapping pair:
/// a = c, b = d, |a - b| <= 1.
inline bool structure_check(const AbcdSplit& s) {
    return s.a == s.c && s.b == s.d && (s.a > s.b ? s.a - s.b : s.b - s.a) <= 1;
}

/// Incremental codeword-weight window: every row subset T containing new_row
/// must give |T| + |symmetric difference of its P rows| in [N+1, 2N].
inline bool weight_window_check(const SubsetFamily& fam, std::uint32_t new_row) {
    const int r = static_cast<int>(fam.rows.size());
    const std::uint64_t subsets = std::uint64_t{1} << r;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        std::uint32_t acc = new_row;
        for (int i = 0; i < r; ++i)
            if ((s >> i) & 1) acc ^= fam.rows[i];
        const int t = std::popcount(s) + 1;
        const int w = t + std::popcount(acc);
        if (w < fam.N + 1 || w > 2 * fam.N) return false;
    }
    return true;
}

/// Generator [I_k | P] from a complete family: row j is identity bit j plus
/// the indicator of P_j, so each row has weight N+1 = k.
inline LinearCode assemble_generator(const SubsetFamily& fam) {
    if (static_cast<int>(fam.rows.size()) != fam.N + 1)
        throw IncompleteFamily("family has " + std::to_string(fam.rows.size()) +
                               " rows, expected " + std::to_string(fam.N + 1));
    const int k = fam.N + 1;
    const int n = 3 * fam.N;
    std::vector<Row> gen(k, Row(n, 0));
    for (int r = 0; r < k; ++r) {
        gen[r][r] = 1;
        for (int e = 0; e < 2 * fam.N - 1; ++e)
            if ((fam.rows[r] >> e) & 1) gen[r][k + e] = 1;
    }
    return LinearCode(2, std::move(gen));
}

} // namespace mincode
