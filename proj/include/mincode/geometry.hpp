#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mincode/errors.hpp"
#include "mincode/linear_code.hpp"

namespace mincode {

/// Multiset of points of PG(k-1, q), scalar-normalized so the first nonzero
/// coordinate is 1. A code is projective iff all multiplicities are 1.
struct ProjectivePointSet {
    int q = 2;
    int k = 0;
    std::map<Row, int> multiplicity;

    bool projective() const {
        for (const auto& [p, m] : multiplicity)
            if (m != 1) return false;
        return true;
    }

    std::size_t distinct_points() const { return multiplicity.size(); }
};

inline Row normalize_point(int q, Row v) {
    for (std::uint8_t x : v) {
        if (x != 0) {
            const std::uint8_t inv = gf_inv(q, x);
            for (std::uint8_t& y : v) y = gf_mul(q, y, inv);
            return v;
        }
    }
    throw DegenerateColumn("cannot normalize the zero vector");
}

/// Columns of the generator matrix projected onto PG(k-1, q).
inline ProjectivePointSet projective_points(const LinearCode& code) {
    ProjectivePointSet pts;
    pts.q = code.q();
    pts.k = code.k();
    for (int c = 0; c < code.n(); ++c) {
        Row col(code.k());
        bool zero = true;
        for (int r = 0; r < code.k(); ++r) {
            col[r] = code.generator()[r][c];
            if (col[r] != 0) zero = false;
        }
        if (zero)
            throw DegenerateColumn("zero column at index " + std::to_string(c));
        ++pts.multiplicity[normalize_point(code.q(), std::move(col))];
    }
    return pts;
}

struct BlockingSetResult {
    bool strong = false;
    /// On failure, the normalized dual vector of a hyperplane whose
    /// intersection with the point set does not span it.
    std::optional<Row> witness_hyperplane;
};

/// Checks the strong blocking set property: for every hyperplane H (dual
/// vector modulo scalar), the points lying on H must have rank k-1.
inline BlockingSetResult is_strong_blocking_set(const ProjectivePointSet& pts, int k, int q) {
    if (q != 2 && q != 3)
        throw Unsupported("strong blocking set check supports q in {2, 3}");
    if (message_count(q, k) > kEnumerationGuard)
        throw DimensionTooLarge("q^k exceeds the enumeration guard in hyperplane enumeration");

    std::vector<Row> points;
    points.reserve(pts.multiplicity.size());
    for (const auto& [p, m] : pts.multiplicity) points.push_back(p);

    const std::uint64_t total = message_count(q, k);
    for (std::uint64_t h = 1; h < total; ++h) {
        Row dual(k);
        std::uint64_t t = h;
        for (int r = k - 1; r >= 0; --r) {
            dual[r] = static_cast<std::uint8_t>(t % q);
            t /= q;
        }
        // One dual vector per hyperplane: skip non-normalized scalars.
        bool normalized = true;
        for (std::uint8_t x : dual) {
            if (x == 0) continue;
            normalized = (x == 1);
            break;
        }
        if (!normalized) continue;

        std::vector<Row> on_hyperplane;
        for (const Row& p : points) {
            int dot = 0;
            for (int i = 0; i < k; ++i) dot = (dot + dual[i] * p[i]) % q;
            if (dot == 0) on_hyperplane.push_back(p);
        }
        if (detail::gf_rank(q, std::move(on_hyperplane)) != k - 1)
            return {false, dual};
    }
    return {true, std::nullopt};
}

/// Cross-checks the minimality test against the geometric characterization.
/// The two must always agree; a disagreement is an internal bug, not a result.
inline bool minimal_iff_strong_blocking_audit(const LinearCode& code) {
    const bool minimal = is_minimal_code(code).minimal;
    const bool strong = is_strong_blocking_set(projective_points(code), code.k(), code.q()).strong;
    if (minimal != strong)
        throw VerificationFailed("minimality and strong-blocking-set checkers disagree");
    return minimal;
}

} // namespace mincode
