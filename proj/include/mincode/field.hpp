#pragma once

#include <cstdint>
#include <compare>

#include "mincode/errors.hpp"

namespace mincode {

/// Smallest prime factor of n (n >= 2), trial division.
inline long smallest_prime_factor(long n) {
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

/// True iff q = p^e for a prime p and e >= 1.
inline bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = smallest_prime_factor(q);
    while (q % p == 0) q /= p;
    return q == 1;
}

/// A validated field order. Arithmetic helpers below additionally require
/// q prime (they reduce mod q); the exact-code layer restricts to q <= 3.
struct FieldOrder {
    int q;

    explicit FieldOrder(int order) : q(order) {
        if (!is_prime_power(order))
            throw NotPrimePower("field order " + std::to_string(order) + " is not a prime power");
    }

    auto operator<=>(const FieldOrder&) const = default;
};

inline std::uint8_t gf_add(int q, std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>((a + b) % q);
}

inline std::uint8_t gf_sub(int q, std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>((a + q - b) % q);
}

inline std::uint8_t gf_mul(int q, std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>((a * b) % q);
}

/// Multiplicative inverse for prime q (q <= 3 in practice: inverses are self).
inline std::uint8_t gf_inv(int q, std::uint8_t a) {
    if (a == 0) throw DomainError("inverse of zero");
    for (std::uint8_t x = 1; x < q; ++x)
        if (gf_mul(q, a, x) == 1) return x;
    throw DomainError("no inverse: field order not prime?");
}

inline std::uint8_t gf_neg(int q, std::uint8_t a) {
    return static_cast<std::uint8_t>((q - a) % q);
}

} // namespace mincode
