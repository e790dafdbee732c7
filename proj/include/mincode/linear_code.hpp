#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincode/bitmask.hpp"
#include "mincode/errors.hpp"
#include "mincode/field.hpp"

namespace mincode {

using Row = std::vector<std::uint8_t>;

namespace detail {

/// Rank of a k x n matrix over GF(q), q prime. Destroys its copy of m.
inline int gf_rank(int q, std::vector<Row> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint8_t inv = gf_inv(q, m[rank][col]);
        for (int c = col; c < cols; ++c) m[rank][c] = gf_mul(q, m[rank][c], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const std::uint8_t f = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = gf_sub(q, m[r][c], gf_mul(q, f, m[rank][c]));
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Guards against runaway enumeration (q^k message vectors).
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kMinimalityGuard = std::uint64_t{1} << 20;

/// q^k as uint64, saturating at 2^63 to keep guard comparisons safe.
inline std::uint64_t message_count(int q, int k) {
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > (std::uint64_t{1} << 63) / static_cast<std::uint64_t>(q))
            return std::uint64_t{1} << 63;
        v *= static_cast<std::uint64_t>(q);
    }
    return v;
}

struct Codeword {
    Row coords;
    int weight = 0;
    Mask128 support;
};

inline Codeword make_codeword(Row coords) {
    Codeword c;
    c.coords = std::move(coords);
    for (int i = 0; i < static_cast<int>(c.coords.size()); ++i) {
        if (c.coords[i] != 0) {
            c.support.set(i);
            ++c.weight;
        }
    }
    return c;
}

/// An [n, k]_q code given by a full-rank generator matrix. Exact arithmetic
/// is provided for q in {2, 3} only.
class LinearCode {
public:
    LinearCode(int q, std::vector<Row> generator) : q_(q), gen_(std::move(generator)) {
        if (q_ != 2 && q_ != 3)
            throw Unsupported("exact code arithmetic supports q in {2, 3}, got q=" + std::to_string(q_));
        if (gen_.empty() || gen_[0].empty())
            throw RankDeficient("empty generator matrix");
        k_ = static_cast<int>(gen_.size());
        n_ = static_cast<int>(gen_[0].size());
        if (n_ > 128)
            throw DimensionTooLarge("length " + std::to_string(n_) + " exceeds the 128-bit support cap");
        if (k_ > n_) throw RankDeficient("k > n");
        for (const Row& r : gen_) {
            if (static_cast<int>(r.size()) != n_)
                throw ParseError("ragged generator matrix");
            for (std::uint8_t v : r)
                if (v >= q_) throw ParseError("generator entry out of field range");
        }
        if (detail::gf_rank(q_, gen_) != k_)
            throw RankDeficient("generator matrix has rank below k");
        row_masks_.resize(k_);
        for (int r = 0; r < k_; ++r)
            for (int c = 0; c < n_; ++c)
                if (gen_[r][c]) row_masks_[r].set(c);
    }

    int q() const { return q_; }
    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<Row>& generator() const { return gen_; }
    const std::vector<Mask128>& row_masks() const { return row_masks_; }

    /// Codeword for a given message vector (length k).
    Codeword encode(const Row& message) const {
        Row coords(n_, 0);
        for (int r = 0; r < k_; ++r) {
            if (message[r] == 0) continue;
            for (int c = 0; c < n_; ++c)
                coords[c] = gf_add(q_, coords[c], gf_mul(q_, message[r], gen_[r][c]));
        }
        return make_codeword(std::move(coords));
    }

private:
    int q_;
    int k_ = 0;
    int n_ = 0;
    std::vector<Row> gen_;
    std::vector<Mask128> row_masks_;
};

inline void check_enumeration_guard(const LinearCode& code, std::uint64_t guard) {
    if (message_count(code.q(), code.k()) > guard)
        throw DimensionTooLarge("q^k exceeds the enumeration guard (q=" + std::to_string(code.q()) +
                                ", k=" + std::to_string(code.k()) + ")");
}

/// Streams all q^k - 1 nonzero codewords, lexicographic in message vectors
/// (first message coordinate most significant).
template <typename Fn>
void for_each_nonzero_codeword(const LinearCode& code, Fn&& fn) {
    check_enumeration_guard(code, kEnumerationGuard);
    const int q = code.q();
    const int k = code.k();
    Row msg(k, 0);
    const std::uint64_t total = message_count(q, k);
    if (q == 2) {
        // Support-only fast path shares coords with the mask.
        for (std::uint64_t m = 1; m < total; ++m) {
            Mask128 acc;
            for (int r = 0; r < k; ++r)
                if ((m >> (k - 1 - r)) & 1) acc ^= code.row_masks()[r];
            Row coords(code.n(), 0);
            for (int c = 0; c < code.n(); ++c)
                if (acc.test(c)) coords[c] = 1;
            Codeword cw;
            cw.coords = std::move(coords);
            cw.support = acc;
            cw.weight = acc.popcount();
            fn(cw);
        }
        return;
    }
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t t = m;
        for (int r = k - 1; r >= 0; --r) {
            msg[r] = static_cast<std::uint8_t>(t % q);
            t /= q;
        }
        fn(code.encode(msg));
    }
}

inline std::vector<Codeword> all_nonzero_codewords(const LinearCode& code) {
    check_enumeration_guard(code, kEnumerationGuard);
    std::vector<Codeword> out;
    out.reserve(static_cast<std::size_t>(message_count(code.q(), code.k()) - 1));
    for_each_nonzero_codeword(code, [&](const Codeword& c) { out.push_back(c); });
    return out;
}

struct WeightProfile {
    int d_min = 0;
    int w_max = 0;
    std::map<int, std::uint64_t> distribution; // weight -> count of nonzero codewords
};

inline WeightProfile weight_profile(const LinearCode& code) {
    WeightProfile wp;
    wp.d_min = code.n() + 1;
    for_each_nonzero_codeword(code, [&](const Codeword& c) {
        wp.d_min = std::min(wp.d_min, c.weight);
        wp.w_max = std::max(wp.w_max, c.weight);
        ++wp.distribution[c.weight];
    });
    return wp;
}

struct MinimalityResult {
    bool minimal = false;
    /// On failure, (inner, outer) with support(inner) strictly inside support(outer).
    std::optional<std::pair<Codeword, Codeword>> witness;
};

/// A nonzero codeword is minimal if no other nonzero codeword has support
/// strictly inside its own; the code is minimal if all codewords are.
/// Codewords are sorted by weight so each one is tested only against
/// strictly lighter ones (strict support inclusion forces smaller weight).
inline MinimalityResult is_minimal_code(const LinearCode& code) {
    check_enumeration_guard(code, kMinimalityGuard);
    struct Entry {
        int weight;
        Mask128 support;
        std::uint64_t message;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(message_count(code.q(), code.k()) - 1));
    std::uint64_t msg_index = 0;
    for_each_nonzero_codeword(code, [&](const Codeword& c) {
        ++msg_index;
        entries.push_back({c.weight, c.support, msg_index});
    });
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.weight < b.weight; });

    auto decode_message = [&](std::uint64_t m) {
        Row msg(code.k(), 0);
        std::uint64_t t = m;
        for (int r = code.k() - 1; r >= 0; --r) {
            msg[r] = static_cast<std::uint8_t>(t % code.q());
            t /= code.q();
        }
        return code.encode(msg);
    };

    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < i && entries[j].weight < entries[i].weight; ++j) {
            if (entries[j].support.subset_of(entries[i].support)) {
                MinimalityResult res;
                res.minimal = false;
                res.witness = {decode_message(entries[j].message), decode_message(entries[i].message)};
                return res;
            }
        }
    }
    return {true, std::nullopt};
}

/// Ashikhmin--Barg sufficient condition: d_min / w_max > (q-1)/q.
/// One-directional: true implies minimal, false implies nothing.
inline bool ashikhmin_barg_check(const LinearCode& code) {
    const WeightProfile wp = weight_profile(code);
    return static_cast<long>(wp.d_min) * code.q() > static_cast<long>(wp.w_max) * (code.q() - 1);
}

struct StandardForm {
    LinearCode code;
    /// column_origin[i] = index in the input of the column now at position i.
    std::vector<int> column_origin;
};

/// Reduces to [I_k | P] using row operations and a column permutation.
/// Pivot columns are tried from pivot_hint first, then left to right.
inline StandardForm standard_form(const LinearCode& code,
                                  const std::vector<int>& pivot_hint = {}) {
    const int q = code.q();
    const int k = code.k();
    const int n = code.n();
    std::vector<Row> m = code.generator();

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> used(n, 0);
    for (int c : pivot_hint) {
        if (c >= 0 && c < n && !used[c]) {
            order.push_back(c);
            used[c] = 1;
        }
    }
    for (int c = 0; c < n; ++c)
        if (!used[c]) order.push_back(c);

    std::vector<int> pivot_cols;
    int rank = 0;
    for (int oc : order) {
        if (rank == k) break;
        int pivot = -1;
        for (int r = rank; r < k; ++r)
            if (m[r][oc] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint8_t inv = gf_inv(q, m[rank][oc]);
        for (int c = 0; c < n; ++c) m[rank][c] = gf_mul(q, m[rank][c], inv);
        for (int r = 0; r < k; ++r) {
            if (r == rank || m[r][oc] == 0) continue;
            const std::uint8_t f = m[r][oc];
            for (int c = 0; c < n; ++c)
                m[r][c] = gf_sub(q, m[r][c], gf_mul(q, f, m[rank][c]));
        }
        pivot_cols.push_back(oc);
        ++rank;
    }
    if (rank < k) throw RankDeficient("rank below k in standard_form");

    std::vector<int> perm;
    perm.reserve(n);
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_cols) is_pivot[c] = 1;
    for (int c : pivot_cols) perm.push_back(c);
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) perm.push_back(c);

    std::vector<Row> out(k, Row(n, 0));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            out[r][c] = m[r][perm[c]];
    return {LinearCode(q, std::move(out)), std::move(perm)};
}

} // namespace mincode
