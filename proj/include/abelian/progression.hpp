#pragma once

#include "abelian/bigint.hpp"
#include "abelian/error.hpp"
#include "abelian/primality.hpp"

#include <stdexcept>

namespace abelian {

/// Smallest prime p with p == a (mod m) and lower < p <= cap.
///
/// Requires m >= 1, 0 <= a < m, lower >= 0 and cap > lower. Fails with
/// NotCoprime when gcd(a, m) != 1 and with SearchBoundExceeded when the
/// progression has no prime in range.
inline Int find_prime_in_progression(const Int& a, const Int& m, const Int& lower, const Int& cap) {
    if (m < 1) throw std::invalid_argument("find_prime_in_progression: modulus must be >= 1");
    if (a < 0 || a >= m) throw std::invalid_argument("find_prime_in_progression: residue out of range");
    if (lower < 0 || cap <= lower) throw std::invalid_argument("find_prime_in_progression: need 0 <= lower < cap");
    if (gcd(a, m) != 1)
        throw error(errc::not_coprime, "gcd(" + to_string(a) + ", " + to_string(m) + ") != 1");

    // first member of the progression strictly above lower
    Int candidate = lower + 1;
    Int offset = (a - candidate) % m;
    if (offset < 0) offset += m;
    candidate += offset;

    for (; candidate <= cap; candidate += m)
        if (is_prime(candidate)) return candidate;
    throw error(errc::search_bound_exceeded, "no prime == " + to_string(a) + " mod " + to_string(m) + " in (" +
                                                 to_string(lower) + ", " + to_string(cap) + "]");
}

}  // namespace abelian
