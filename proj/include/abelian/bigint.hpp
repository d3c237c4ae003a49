#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary precision integer type used throughout the library.
 *
 * The moduli produced by the congruence construction grow multiplicatively
 * with the number of invariant factors, so every public quantity is carried
 * as an unbounded integer. Hot loops drop to 64-bit arithmetic where the
 * operands are known to fit.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

using Int = boost::multiprecision::cpp_int;

inline bool fits_u64(const Int& x) {
    return x >= 0 && x <= Int(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const Int& x) { return x.convert_to<std::uint64_t>(); }

inline std::string to_string(const Int& x) { return x.str(); }

/// Parses a non-negative decimal literal. Returns false on anything else.
inline bool parse_decimal(std::string_view text, Int& out) {
    if (text.empty()) return false;
    Int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return false;
        value *= 10;
        value += c - '0';
    }
    out = value;
    return true;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

inline Int pow(const Int& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline Int product(const std::vector<Int>& xs) {
    Int p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

}  // namespace abelian
