#pragma once

/**
 * @file modular.hpp
 * @brief Modular exponentiation, Jacobi symbols and Chinese remaindering.
 */

#include "abelian/bigint.hpp"
#include "abelian/error.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace abelian {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

/// 64-bit base and modulus with an unbounded exponent.
inline std::uint64_t pow_mod(std::uint64_t base, const Int& exponent, std::uint64_t m) {
    if (fits_u64(exponent)) return pow_mod(base, to_u64(exponent), m);
    std::uint64_t result = 1 % m;
    base %= m;
    const unsigned top = boost::multiprecision::msb(exponent);
    for (unsigned bit = top + 1; bit-- > 0;) {
        result = mul_mod(result, result, m);
        if (boost::multiprecision::bit_test(exponent, bit)) result = mul_mod(result, base, m);
    }
    return result;
}

/// base^exponent mod modulus by square-and-multiply; result in [0, modulus).
inline Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
    if (modulus < 1) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    if (exponent < 0) throw std::invalid_argument("mod_pow: exponent must be >= 0");
    if (modulus == 1) return 0;
    Int b = base % modulus;
    if (b < 0) b += modulus;
    if (fits_u64(modulus)) return Int(pow_mod(to_u64(b), exponent, to_u64(modulus)));
    Int result = 1;
    if (exponent == 0) return result;
    const unsigned top = boost::multiprecision::msb(exponent);
    for (unsigned bit = top + 1; bit-- > 0;) {
        result = result * result % modulus;
        if (boost::multiprecision::bit_test(exponent, bit)) result = result * b % modulus;
    }
    return result;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_s - q * s;
        old_s = std::move(s);
        s = std::move(t);
    }
    if (old_r != 1) throw error(errc::not_coprime, "no inverse of " + to_string(a) + " mod " + to_string(m));
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

/// Jacobi symbol (a/n) for odd positive n.
inline int jacobi(Int a, Int n) {
    if (n <= 0 || boost::multiprecision::bit_test(n, 0) == false)
        throw std::invalid_argument("jacobi: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (!boost::multiprecision::bit_test(a, 0)) {
            a >>= 1;
            const unsigned r = static_cast<unsigned>(n % 8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

struct Congruence {
    Int residue;
    Int modulus;
};

/// Unique x in [0, prod moduli) satisfying every congruence.
inline Int crt_combine(const std::vector<Congruence>& system) {
    Int x = 0;
    Int modulus = 1;
    for (const auto& [r, m] : system) {
        if (m < 1) throw std::invalid_argument("crt_combine: modulus must be >= 1");
        if (r < 0 || r >= m) throw std::invalid_argument("crt_combine: residue out of range");
        if (gcd(modulus, m) != 1)
            throw error(errc::not_coprime, "modulus " + to_string(m) + " shares a factor with " + to_string(modulus));
        // x + modulus * t == r (mod m)
        Int diff = (r - x) % m;
        if (diff < 0) diff += m;
        const Int t = diff * mod_inverse(modulus % m, m) % m;
        x += modulus * t;
        modulus *= m;
    }
    return x;
}

}  // namespace abelian
