#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mincode/errors.hpp"
#include "mincode/field.hpp"

namespace mincode {

inline void require_prime_power(int q) {
    if (!is_prime_power(q))
        throw NotPrimePower(std::to_string(q) + " is not a prime power");
}

namespace detail {

/// Formula bodies without the prime-power gate; epsilon_proof evaluates them
/// at arbitrary large q when probing the limit of epsilon.
inline double entropy_unchecked(double x, int q) {
    const double top = static_cast<double>(q - 1) / q;
    if (x < -1e-15 || x > top + 1e-15)
        throw DomainError("entropy_q argument outside [0, (q-1)/q]");
    x = std::clamp(x, 0.0, top);
    const double lq = std::log(static_cast<double>(q));
    double h = 0.0;
    if (x > 0.0) h -= x * std::log(x / (q - 1)) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

inline double mrrw_unchecked(double delta, int q) {
    const double top = static_cast<double>(q - 1) / q;
    if (delta < -1e-15 || delta > top + 1e-15)
        throw DomainError("mrrw_q argument outside [0, (q-1)/q]");
    delta = std::clamp(delta, 0.0, top);
    const double rad = std::max(0.0, (q - 1) * delta * (1.0 - delta));
    double inner = q - 1 - (q - 2) * delta - 2.0 * std::sqrt(rad);
    inner = std::clamp(inner, 0.0, static_cast<double>(q - 1));
    return entropy_unchecked(inner / q, q);
}

} // namespace detail

/// q-ary entropy H_q(x) = -x log_q(x/(q-1)) - (1-x) log_q(1-x) on [0, (q-1)/q],
/// with 0 log 0 = 0 at the endpoints.
inline double entropy_q(double x, int q) {
    require_prime_power(q);
    return detail::entropy_unchecked(x, q);
}

/// Aaltonen's q-ary MRRW upper bound
/// M(delta) = H_q( (q-1-(q-2)delta - 2 sqrt((q-1)delta(1-delta))) / q ).
/// The inner expression is clamped into [0, q-1] against round-off at the
/// right endpoint.
inline double mrrw_q(double delta, int q) {
    require_prime_power(q);
    return detail::mrrw_unchecked(delta, q);
}

/// Asymptotic Plotkin bound R(delta) = 1 - q delta / (q-1), floored at 0.
inline double plotkin_asymptotic(double delta, int q) {
    require_prime_power(q);
    const double top = static_cast<double>(q - 1) / q;
    if (delta < -1e-15 || delta > top + 1e-15)
        throw DomainError("plotkin_asymptotic argument outside [0, (q-1)/q]");
    delta = std::clamp(delta, 0.0, top);
    return std::max(0.0, 1.0 - static_cast<double>(q) / (q - 1) * delta);
}

/// Rate cap for minimal codes, g(delta) = delta / (q-1) (increasing).
inline double minimal_rate_cap(double delta, int q) {
    require_prime_power(q);
    const double top = static_cast<double>(q - 1) / q;
    if (delta < -1e-15 || delta > top + 1e-15)
        throw DomainError("minimal_rate_cap argument outside [0, (q-1)/q]");
    return std::clamp(delta, 0.0, top) / (q - 1);
}

struct BoundProfile {
    std::string name;
    int q;
    std::function<double(double)> eval; // delta in [0, (q-1)/q] -> rate
    bool monotone_decreasing = true;
};

inline BoundProfile mrrw_profile(int q) {
    require_prime_power(q);
    return {"mrrw", q, [q](double d) { return mrrw_q(d, q); }, true};
}

inline BoundProfile plotkin_profile(int q) {
    require_prime_power(q);
    return {"plotkin", q, [q](double d) { return plotkin_asymptotic(d, q); }, true};
}

inline BoundProfile singleton_profile(int q) {
    require_prime_power(q);
    return {"singleton", q, [](double d) { return 1.0 - d; }, true};
}

inline constexpr double kBisectionTol = 1e-12;

/// Deterministic bisection: f(lo) and f(hi) must have opposite signs.
template <typename Fn>
double bisect(Fn&& f, double lo, double hi, double tol = kBisectionTol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoCrossing("bisection bracket does not change sign");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Crossing {
    double delta_star = 0.0;   // profile(delta*) = delta*/(q-1)
    double liminf_ratio = 0.0; // (q-1)/delta* = 1/R*
};

/// Intersection of a decreasing upper-bounding profile with the increasing
/// minimal-code rate cap. The crossing is unique by monotonicity; the
/// resulting 1/R* lower-bounds liminf m(k, q)/k.
inline Crossing liminf_lower_bound(int q, const BoundProfile& profile) {
    require_prime_power(q);
    const double top = static_cast<double>(q - 1) / q;
    auto diff = [&](double d) { return profile.eval(d) - minimal_rate_cap(d, q); };
    // profile(0) > 0 = cap(0); at the right endpoint the cap is positive
    // while registered profiles vanish.
    const double delta_star = bisect(diff, 1e-9, top);
    return {delta_star, (q - 1) / delta_star};
}

struct EpsilonSolution {
    int q = 0;
    double epsilon = 0.0;      // root of the proof inequality taken as equality
    double delta_c = 0.0;      // (q-1)/(q+epsilon)
    double A = 0.0;            // MRRW inner expression at delta_c
    double C = 0.0;            // epsilon + 2 - 2 sqrt(epsilon + 1)
    double liminf_ratio = 0.0; // intersection-based bound, for comparison
};

inline double epsilon_c_of(double eps) { return eps + 2.0 - 2.0 * std::sqrt(eps + 1.0); }

/// Solves ((q-1)/q) * C * log_q(e q (q+eps) / C) = 1 for eps in [1, 2],
/// with C = eps + 2 - 2 sqrt(eps + 1). This is the explicit (slightly
/// suboptimal) epsilon of the asymptotic lower bound m(k, q) >= (q+eps) k.
/// Accepts any q >= 2: the defining equation is a real-analytic formula in
/// q, and probing the limit of epsilon needs values like q = 10^6 that are
/// not field orders.
inline EpsilonSolution epsilon_proof(int q) {
    if (q < 2) throw DomainError("epsilon_proof requires q >= 2");
    const double lq = std::log(static_cast<double>(q));
    auto lhs = [&](double eps) {
        const double c = epsilon_c_of(eps);
        return (q - 1.0) / q * c * std::log(std::exp(1.0) * q * (q + eps) / c) / lq - 1.0;
    };
    const double eps = bisect(lhs, 1.0, 2.0);
    EpsilonSolution sol;
    sol.q = q;
    sol.epsilon = eps;
    sol.delta_c = (q - 1.0) / (q + eps);
    sol.C = epsilon_c_of(eps);
    sol.A = (q - 1.0) / (q * (q + eps)) * sol.C;
    const double top = (q - 1.0) / q;
    auto diff = [&](double d) { return detail::mrrw_unchecked(d, q) - d / (q - 1.0); };
    sol.liminf_ratio = (q - 1.0) / bisect(diff, 1e-9, top);
    return sol;
}

/// The proof's auxiliary function: decreasing in x is what propagates
/// monotonicity of epsilon past the prime power ell.
inline double epsilon_aux_f(double x, double c_ell, double eps_ell) {
    return (x - 1.0) / x * c_ell * std::log(std::exp(1.0) / c_ell * x * (x + eps_ell)) / std::log(x);
}

/// True iff epsilon_proof strictly increases along q_list, and for each ell
/// in the list the auxiliary f is decreasing on [ell, 4 ell] (dense sampling).
inline bool epsilon_monotonicity_audit(std::span<const int> q_list, int samples = 10000) {
    double prev = -1.0;
    for (int q : q_list) {
        const EpsilonSolution sol = epsilon_proof(q);
        if (sol.epsilon <= prev) return false;
        prev = sol.epsilon;

        const double c_ell = sol.C;
        double last = epsilon_aux_f(static_cast<double>(q), c_ell, sol.epsilon);
        for (int i = 1; i <= samples; ++i) {
            const double x = q + 3.0 * q * static_cast<double>(i) / samples;
            const double v = epsilon_aux_f(x, c_ell, sol.epsilon);
            if (v > last + 1e-12) return false;
            last = v;
        }
    }
    return true;
}

struct GapRow {
    int q = 0;
    double liminf_ratio = 0.0;
    double gap = 0.0;     // liminf_ratio - q
    double epsilon = 0.0; // epsilon_proof value, always <= gap
};

inline std::vector<GapRow> bound_gap_table(std::span<const int> q_list) {
    std::vector<GapRow> rows;
    rows.reserve(q_list.size());
    for (int q : q_list) {
        const EpsilonSolution sol = epsilon_proof(q);
        rows.push_back({q, sol.liminf_ratio, sol.liminf_ratio - q, sol.epsilon});
    }
    return rows;
}

struct CurveSample {
    double delta = 0.0;
    std::map<std::string, double> values;
};

/// Uniform grid of the registered profiles plus the rate cap; the MRRW/cap
/// crossing is inserted as an extra row so the dotted-line point is exact.
inline std::vector<CurveSample> curve_dump(int q, int grid_size) {
    require_prime_power(q);
    if (grid_size < 2) throw DomainError("grid_size must be >= 2");
    const double top = static_cast<double>(q - 1) / q;
    const Crossing cross = liminf_lower_bound(q, mrrw_profile(q));

    auto sample_at = [&](double d) {
        CurveSample s;
        s.delta = d;
        s.values["mrrw"] = mrrw_q(d, q);
        s.values["plotkin"] = plotkin_asymptotic(d, q);
        s.values["singleton"] = 1.0 - d;
        s.values["minimal_cap"] = minimal_rate_cap(d, q);
        return s;
    };

    std::vector<CurveSample> out;
    out.reserve(static_cast<std::size_t>(grid_size) + 1);
    bool crossing_inserted = false;
    for (int i = 0; i < grid_size; ++i) {
        const double d = top * static_cast<double>(i) / (grid_size - 1);
        if (!crossing_inserted && cross.delta_star < d) {
            out.push_back(sample_at(cross.delta_star));
            crossing_inserted = true;
        }
        out.push_back(sample_at(d));
    }
    if (!crossing_inserted) out.push_back(sample_at(cross.delta_star));
    return out;
}

} // namespace mincode
