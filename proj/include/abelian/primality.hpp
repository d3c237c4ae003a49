#pragma once

/**
 * @file primality.hpp
 * @brief Primality testing.
 *
 * Below 2^64 the strong pseudoprime test with the first twelve prime bases is
 * deterministic (Sorenson and Webster verified the set up to 3.3 * 10^24).
 * Above 2^64 we run a Baillie-PSW style test (base-2 strong test plus a strong
 * Lucas test with Selfridge parameters) followed by 40 strong tests to
 * pseudo-random bases drawn from a fixed seed, so results are reproducible.
 */

#include "abelian/bigint.hpp"
#include "abelian/modular.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace abelian {

namespace detail {

inline constexpr std::array<std::uint32_t, 12> kWitnesses64{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

inline bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
    base %= n;
    if (base == 0) return true;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool strong_probable_prime(const Int& n, const Int& base) {
    Int d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    Int x = mod_pow(base, d, n);
    const Int minus_one = n - 1;
    if (x == 1 || x == minus_one) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == minus_one) return true;
    }
    return false;
}

inline Int half_mod(Int x, const Int& n) {
    if (boost::multiprecision::bit_test(x, 0)) x += n;
    return x >> 1;
}

inline Int reduce(Int x, const Int& n) {
    x %= n;
    if (x < 0) x += n;
    return x;
}

/// Strong Lucas probable prime test, Selfridge method A (P = 1). n odd, not a square.
inline bool strong_lucas_probable_prime(const Int& n) {
    Int D = 5;
    for (;;) {
        const int j = jacobi(D, n);
        if (j == -1) break;
        if (j == 0 && abs(D) != n) return false;
        D = D > 0 ? Int(-(D + 2)) : Int(-(D - 2));
    }
    const Int P = 1;
    const Int Q = (1 - D) / 4;

    Int d = n + 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }

    const Int Dm = reduce(D, n);
    const Int Qm = reduce(Q, n);
    Int U = 1, V = P, Qk = Qm;
    const unsigned top = boost::multiprecision::msb(d);
    for (unsigned bit = top; bit-- > 0;) {
        U = U * V % n;
        V = reduce(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (boost::multiprecision::bit_test(d, bit)) {
            Int nu = half_mod(P * U + V, n);
            Int nv = half_mod(Dm * U + P * V, n);
            U = reduce(nu, n);
            V = reduce(nv, n);
            Qk = Qk * Qm % n;
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned r = 1; r < s; ++r) {
        V = reduce(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (V == 0) return true;
    }
    return false;
}

inline constexpr std::array<std::uint32_t, 25> kSmallPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace detail

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint32_t p : detail::kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 97ull * 97ull) return true;
    for (std::uint32_t a : detail::kWitnesses64)
        if (!detail::strong_probable_prime(n, a)) return false;
    return true;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    for (std::uint32_t p : detail::kSmallPrimes)
        if (n % p == 0) return false;
    if (!detail::strong_probable_prime(n, Int(2))) return false;
    const Int root = boost::multiprecision::sqrt(n);
    if (root * root == n) return false;
    if (!detail::strong_lucas_probable_prime(n)) return false;

    std::mt19937_64 rng(0x5eed'ab31'2a9f'0001ull);
    const Int span = n - 3;
    for (int round = 0; round < 40; ++round) {
        Int r = 0;
        for (unsigned limb = 0; limb * 64 <= boost::multiprecision::msb(n) + 64; ++limb) {
            r <<= 64;
            r += rng();
        }
        if (!detail::strong_probable_prime(n, r % span + 2)) return false;
    }
    return true;
}

}  // namespace abelian
