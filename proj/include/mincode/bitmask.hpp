#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace mincode {

/// 128-bit support mask, enough for every code length this artifact handles.
/// Bit i corresponds to coordinate i (0-based).
struct Mask128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    void set(int i) {
        if (i < 64) lo |= std::uint64_t{1} << i;
        else hi |= std::uint64_t{1} << (i - 64);
    }

    bool test(int i) const {
        if (i < 64) return (lo >> i) & 1;
        return (hi >> (i - 64)) & 1;
    }

    int popcount() const { return std::popcount(lo) + std::popcount(hi); }

    bool none() const { return lo == 0 && hi == 0; }

    bool subset_of(const Mask128& o) const {
        return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
    }

    friend Mask128 operator^(Mask128 a, const Mask128& b) {
        a.lo ^= b.lo;
        a.hi ^= b.hi;
        return a;
    }

    friend Mask128 operator&(Mask128 a, const Mask128& b) {
        a.lo &= b.lo;
        a.hi &= b.hi;
        return a;
    }

    friend Mask128 operator|(Mask128 a, const Mask128& b) {
        a.lo |= b.lo;
        a.hi |= b.hi;
        return a;
    }

    Mask128& operator^=(const Mask128& b) {
        lo ^= b.lo;
        hi ^= b.hi;
        return *this;
    }

    auto operator<=>(const Mask128&) const = default;
};

} // namespace mincode
