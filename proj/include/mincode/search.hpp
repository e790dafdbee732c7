#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mincode/errors.hpp"
#include "mincode/subset_family.hpp"

namespace mincode {

inline constexpr const char* kToolVersion = "1.0.0";

/// True iff N = 4 (mod 8), in which case no [3N, N+1] binary minimal code
/// exists: every further row meets the d-block in exactly N/4 elements, and
/// the (N-1) x (N/4) tail submatrix then holds an odd number of ones, so its
/// columns cannot all have even weight. The counting fact (N-1)(N/4) odd is
/// re-verified concretely.
inline bool parity_obstruction(int N) {
    if (N < 1) throw Unsupported("N must be >= 1");
    if (N % 8 != 4) return false;
    const long ones = static_cast<long>(N - 1) * (N / 4);
    if (ones % 2 == 0)
        throw VerificationFailed("parity obstruction internal check failed: (N-1)(N/4) is even");
    return true;
}

struct SearchConfig {
    int max_N = 12;
    int threads = 1;
};

struct PruneCounters {
    std::uint64_t pairwise = 0;
    std::uint64_t structure = 0;
    std::uint64_t weight = 0;
    std::uint64_t parity = 0;
};

struct SearchCertificate {
    enum class Outcome { Found, Exhausted };

    int N = 0;
    Outcome outcome = Outcome::Exhausted;
    std::optional<std::vector<std::string>> generator; // rows of G as 0/1 strings
    std::uint64_t nodes = 0;
    PruneCounters pruned_by;
    std::vector<std::string> assumptions;
    double elapsed_s = 0.0;
    std::string version = kToolVersion;
};

namespace detail {

struct BlockPair {
    std::uint32_t a_mask = 0, b_mask = 0, c_mask = 0, d_mask = 0;
};

inline BlockPair block_pair(std::uint32_t r1, std::uint32_t r2, std::uint32_t ground) {
    return {r1 & ~r2, r1 & r2, r2 & ~r1, ground & ~(r1 | r2)};
}

inline bool structure_ok(std::uint32_t cand, const BlockPair& bp) {
    const int a = std::popcount(cand & bp.a_mask);
    const int c = std::popcount(cand & bp.c_mask);
    if (a != c) return false;
    const int b = std::popcount(cand & bp.b_mask);
    const int d = std::popcount(cand & bp.d_mask);
    if (b != d) return false;
    return (a > b ? a - b : b - a) <= 1;
}

inline bool window_ok(int N, std::uint32_t a, std::uint32_t b) {
    const int inter = std::popcount(a & b);
    return 2 * inter >= N - 1 && 2 * inter <= N + 1;
}

// Dense bitsets over candidate indices; pairwise admissibility is
// precomputed once per (P1, P2) configuration so the inner search touches
// words, not candidates.
using Bitset = std::vector<std::uint64_t>;

inline std::size_t bs_words(std::size_t bits) { return (bits + 63) / 64; }

inline Bitset bs_full(std::size_t bits) {
    Bitset b(bs_words(bits), ~std::uint64_t{0});
    if (bits % 64 != 0) b.back() = (std::uint64_t{1} << (bits % 64)) - 1;
    return b;
}

inline void bs_set(Bitset& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

inline void bs_clear(Bitset& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

inline bool bs_test(const Bitset& b, std::size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1;
}

inline void bs_and(Bitset& a, const Bitset& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
}

inline std::uint64_t bs_count_and(const Bitset& a, const Bitset& b) {
    std::uint64_t n = 0;
    for (std::size_t w = 0; w < a.size(); ++w) n += std::popcount(a[w] & b[w]);
    return n;
}

inline void bs_mask_from(Bitset& b, std::size_t from) { // keep indices >= from
    const std::size_t w = from >> 6;
    for (std::size_t i = 0; i < w && i < b.size(); ++i) b[i] = 0;
    if (w < b.size() && (from & 63) != 0) b[w] &= ~std::uint64_t{0} << (from & 63);
}

/// One admissible (P1, P2) configuration with its candidate universe and
/// precomputed pairwise admissibility.
struct Configuration {
    int t_rank = 0;
    std::uint32_t p1 = 0, p2 = 0;
    std::vector<std::uint32_t> base;     // ascending
    std::vector<Bitset> compat;          // pairwise window satisfied, self excluded
    std::vector<Bitset> bad_window;      // pairwise window violated (includes self)
    std::vector<std::size_t> third_rows; // canonical block-prefix third rows
};

inline void build_pairwise(Configuration& cfg, int N) {
    const std::size_t B = cfg.base.size();
    const std::size_t W = bs_words(B);
    cfg.compat.assign(B, Bitset(W, 0));
    cfg.bad_window.assign(B, Bitset(W, 0));
    for (std::size_t i = 0; i < B; ++i) {
        bs_set(cfg.bad_window[i], i); // a row is never admissible with itself
        for (std::size_t j = i + 1; j < B; ++j) {
            if (window_ok(N, cfg.base[i], cfg.base[j])) {
                bs_set(cfg.compat[i], j);
                bs_set(cfg.compat[j], i);
            } else {
                bs_set(cfg.bad_window[i], j);
                bs_set(cfg.bad_window[j], i);
            }
        }
    }
}

/// Block-prefix third rows: within each of the four contiguous blocks of the
/// (P1, P2) partition the row occupies an initial segment. Any family can be
/// brought to this form by column permutations inside the blocks, which fix
/// both P1 and P2.
inline void build_third_rows(Configuration& cfg, int N, int t) {
    const int sizes[4] = {N - t, t, N - t, t - 1};
    int starts[4];
    starts[0] = 0;
    for (int b = 1; b < 4; ++b) starts[b] = starts[b - 1] + sizes[b - 1];
    for (int wa = 0; wa <= sizes[0]; ++wa)
        for (int wb = 0; wb <= sizes[1]; ++wb)
            for (int wc = 0; wc <= sizes[2]; ++wc) {
                const int wd = N - wa - wb - wc;
                if (wd < 0 || wd > sizes[3]) continue;
                std::uint32_t m = 0;
                const int counts[4] = {wa, wb, wc, wd};
                for (int b = 0; b < 4; ++b)
                    for (int e = 0; e < counts[b]; ++e)
                        m |= std::uint32_t{1} << (starts[b] + e);
                const auto it = std::lower_bound(cfg.base.begin(), cfg.base.end(), m);
                if (it != cfg.base.end() && *it == m)
                    cfg.third_rows.push_back(static_cast<std::size_t>(it - cfg.base.begin()));
            }
    std::sort(cfg.third_rows.begin(), cfg.third_rows.end());
}

struct SearchState {
    int N = 0;
    const Configuration* cfg = nullptr;
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> xors; // xors[S] = xor of rows selected by bitset S
    std::uint64_t nodes = 0;
    PruneCounters pruned;
    std::optional<std::vector<std::uint32_t>> found;

    bool weight_ok(std::uint32_t cand) const {
        for (std::size_t s = 0; s < xors.size(); ++s) {
            const int t = std::popcount(s) + 1;
            const int w = t + std::popcount(xors[s] ^ cand);
            if (w < N + 1 || w > 2 * N) return false;
        }
        return true;
    }

    void push_row(std::uint32_t r) {
        const std::size_t old = xors.size();
        xors.resize(old * 2);
        for (std::size_t s = 0; s < old; ++s) xors[old + s] = xors[s] ^ r;
        rows.push_back(r);
    }

    void pop_row() {
        xors.resize(xors.size() / 2);
        rows.pop_back();
    }

    /// Place candidate index `ci`, charge the pruning of its incompatible
    /// peers among the still-considered candidates, and return the surviving
    /// viable set (indices >= next_from, admissible with everything placed
    /// so far).
    Bitset place(const Bitset& viable, std::size_t ci, std::size_t next_from) {
        const std::uint32_t r = cfg->base[ci];
        Bitset v = viable;
        bs_clear(v, ci);
        bs_mask_from(v, next_from);
        pruned.pairwise += bs_count_and(v, cfg->bad_window[ci]);
        bs_and(v, cfg->compat[ci]);
        if (N % 2 == 0) {
            // a/b/c/d structure of every pair the new row forms. Survivors
            // of the pairwise window meet both rows in N/2 elements, so the
            // whole split is determined by b = |cand & prev & r| and the
            // balance condition reduces to |N/2 - 2b| <= 1.
            for (std::uint32_t prev : rows) {
                const std::uint32_t mid = prev & r;
                for (std::size_t w = 0; w < v.size(); ++w) {
                    std::uint64_t bits = v[w];
                    while (bits) {
                        const int bit = std::countr_zero(bits);
                        bits &= bits - 1;
                        const int b = std::popcount(cfg->base[w * 64 + bit] & mid);
                        const int dev = N / 2 - 2 * b;
                        if (dev > 1 || dev < -1) {
                            v[w] &= ~(std::uint64_t{1} << bit);
                            ++pruned.structure;
                        }
                    }
                }
            }
        }
        push_row(r);
        return v;
    }

    void dfs(const Bitset& viable, std::size_t from) {
        if (found) return;
        const int m = static_cast<int>(rows.size());
        if (m == N) {
            // The final row is forced: the total symmetric difference must
            // vanish. Rows after the canonical third one form an increasing
            // chain, so the forced row must top it.
            const std::uint32_t forced = xors.back();
            if (std::popcount(forced) != N) return;
            if (m >= 4 && forced <= rows.back()) return;
            const auto it = std::lower_bound(cfg->base.begin(), cfg->base.end(), forced);
            if (it == cfg->base.end() || *it != forced) return;
            const auto idx = static_cast<std::size_t>(it - cfg->base.begin());
            if (!bs_test(viable, idx)) return;
            ++nodes;
            if (!weight_ok(forced)) {
                ++pruned.weight;
                return;
            }
            push_row(forced);
            if (xors.back() == 0) found = rows;
            pop_row();
            return;
        }
        for (std::size_t w = from >> 6; w < viable.size(); ++w) {
            std::uint64_t bits = viable[w];
            if (w == from >> 6 && (from & 63) != 0) bits &= ~std::uint64_t{0} << (from & 63);
            while (bits) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                ++nodes;
                const std::uint32_t cand = cfg->base[i];
                if (!weight_ok(cand)) {
                    ++pruned.weight;
                    continue;
                }
                const Bitset child = place(viable, i, i + 1);
                dfs(child, i + 1);
                pop_row();
                if (found) return;
            }
        }
    }
};

struct TaskResult {
    std::uint64_t nodes = 0;
    PruneCounters pruned;
    std::optional<std::pair<int, std::vector<std::uint32_t>>> found; // (t-rank, rows)
};

/// Explore the subtree rooted at one canonical third row.
inline TaskResult run_task(const Configuration& cfg, int N, std::size_t third_pos) {
    SearchState st;
    st.N = N;
    st.cfg = &cfg;
    st.xors = {0};
    st.push_row(cfg.p1);
    st.push_row(cfg.p2);

    const std::size_t ri = cfg.third_rows[third_pos];
    ++st.nodes;
    if (!st.weight_ok(cfg.base[ri])) {
        ++st.pruned.weight;
    } else {
        const Bitset child = st.place(bs_full(cfg.base.size()), ri, 0);
        st.dfs(child, 0);
        st.pop_row();
    }

    TaskResult res;
    res.nodes = st.nodes;
    res.pruned = st.pruned;
    if (st.found) {
        std::vector<std::uint32_t> fam = *st.found;
        std::sort(fam.begin() + 2, fam.end()); // canonical reporting order
        res.found = {{cfg.t_rank, std::move(fam)}};
    }
    return res;
}

} // namespace detail

/// Exhaustive depth-first search for a binary [3N, N+1] minimal code in
/// standard form. Canonical reductions (all recorded in the certificate):
/// P1 = {1..N}; P2 per admissible t = |P1 & P2|; the third row in
/// block-prefix position; later rows in strictly increasing bitmask order.
/// All branches are explored to completion so counters are independent of
/// the thread count; if several families survive, the canonically least one
/// is reported.
inline SearchCertificate search(int N, const SearchConfig& cfg = {}) {
    if (N < 1 || N > cfg.max_N)
        throw Unsupported("N=" + std::to_string(N) + " outside [1, " + std::to_string(cfg.max_N) + "]");

    const auto start = std::chrono::steady_clock::now();
    SearchCertificate cert;
    cert.N = N;
    cert.assumptions = {
        "P1 fixed to {1..N} by a column permutation of the right block",
        "P2 fixed to {N-t+1..2N-t} for each admissible t = |P1 & P2| by a block-wise column permutation",
        "one row beyond P1 and P2 normalized to block-prefix form by column permutations inside the four blocks of (P1, P2)",
        "remaining rows enumerated in strictly increasing bitmask order (simultaneous row and identity-column permutation)",
    };

    auto finish = [&](SearchCertificate c) {
        c.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return c;
    };

    if (parity_obstruction(N)) {
        cert.outcome = SearchCertificate::Outcome::Exhausted;
        cert.pruned_by.parity = 1;
        cert.nodes = 0;
        cert.assumptions.push_back("N = 4 (mod 8): parity obstruction, search tree not opened");
        return finish(cert);
    }

    const std::uint32_t ground = (std::uint32_t{1} << (2 * N - 1)) - 1;
    const std::uint32_t p1 = (std::uint32_t{1} << N) - 1;

    // Admissible |P1 & P2| values; t >= 1 since 2N-1 elements cannot hold
    // two disjoint N-subsets.
    std::vector<int> t_values;
    if (N % 2 == 0) {
        t_values.push_back(N / 2);
    } else {
        for (int t : {(N - 1) / 2, (N + 1) / 2})
            if (t >= 1) t_values.push_back(t);
    }

    std::uint64_t nodes = 0;
    PruneCounters pruned;
    std::optional<std::pair<int, std::vector<std::uint32_t>>> best;

    auto consider = [&](const std::optional<std::pair<int, std::vector<std::uint32_t>>>& f) {
        if (!f) return;
        if (!best || *f < *best) best = *f;
    };

    std::vector<detail::Configuration> configs;
    std::vector<std::pair<std::size_t, std::size_t>> tasks; // (config, third-row position)

    int t_rank = 0;
    for (int t : t_values) {
        std::uint32_t p2 = 0;
        for (int e = N - t; e < 2 * N - t; ++e) p2 |= std::uint32_t{1} << e;

        detail::SearchState probe;
        probe.N = N;
        probe.xors = {0};
        probe.push_row(p1);
        if (!detail::window_ok(N, p1, p2)) continue; // cannot happen for admissible t
        if (!probe.weight_ok(p2)) {
            ++pruned.weight;
            ++t_rank;
            continue;
        }
        probe.push_row(p2);

        if (N == 1) {
            // Ground set {1}: the family is already complete.
            ++nodes;
            if (probe.xors.back() == 0) consider({{t_rank, probe.rows}});
            ++t_rank;
            continue;
        }

        detail::Configuration config;
        config.t_rank = t_rank;
        config.p1 = p1;
        config.p2 = p2;
        const detail::BlockPair bp12 = detail::block_pair(p1, p2, ground);
        for (std::uint32_t m = 0; m <= ground; ++m) {
            if (std::popcount(m) != N) continue;
            if (!detail::window_ok(N, m, p1) || !detail::window_ok(N, m, p2)) {
                ++pruned.pairwise;
                continue;
            }
            if (N % 2 == 0 && !detail::structure_ok(m, bp12)) {
                ++pruned.structure;
                continue;
            }
            config.base.push_back(m);
        }
        detail::build_pairwise(config, N);

        if (N == 2) {
            // Only the final forced row remains.
            detail::SearchState st;
            st.N = N;
            st.cfg = &config;
            st.xors = probe.xors;
            st.rows = probe.rows;
            st.dfs(detail::bs_full(config.base.size()), 0);
            nodes += st.nodes;
            pruned.pairwise += st.pruned.pairwise;
            pruned.weight += st.pruned.weight;
            if (st.found) consider({{t_rank, *st.found}});
            ++t_rank;
            continue;
        }

        detail::build_third_rows(config, N, t);
        const std::size_t ci = configs.size();
        for (std::size_t p = 0; p < config.third_rows.size(); ++p) tasks.emplace_back(ci, p);
        configs.push_back(std::move(config));
        ++t_rank;
    }

    const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(tasks.size())));
    std::vector<detail::TaskResult> results(tasks.size());
    auto run_one = [&](std::size_t i) {
        results[i] = detail::run_task(configs[tasks[i].first], N, tasks[i].second);
    };
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    run_one(i);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    for (const detail::TaskResult& r : results) {
        nodes += r.nodes;
        pruned.pairwise += r.pruned.pairwise;
        pruned.structure += r.pruned.structure;
        pruned.weight += r.pruned.weight;
        consider(r.found);
    }

    cert.nodes = nodes;
    cert.pruned_by = pruned;
    if (best) {
        cert.outcome = SearchCertificate::Outcome::Found;
        SubsetFamily fam{N, best->second};
        const LinearCode code = assemble_generator(fam);
        std::vector<std::string> rows;
        for (const Row& r : code.generator()) {
            std::string s;
            for (std::uint8_t v : r) s.push_back(v ? '1' : '0');
            rows.push_back(std::move(s));
        }
        cert.generator = std::move(rows);
    } else {
        cert.outcome = SearchCertificate::Outcome::Exhausted;
    }
    return finish(cert);
}

/// Generator rows of a Found certificate parsed back into a code.
inline LinearCode certificate_code(const SearchCertificate& cert) {
    if (!cert.generator)
        throw VerificationFailed("certificate has no generator matrix");
    std::vector<Row> rows;
    for (const std::string& s : *cert.generator) {
        Row r;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw VerificationFailed("generator rows must be 0/1 strings");
            r.push_back(ch == '1');
        }
        rows.push_back(std::move(r));
    }
    return LinearCode(2, std::move(rows));
}

} // namespace mincode
