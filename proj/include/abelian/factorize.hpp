#pragma once

/**
 * @file factorize.hpp
 * @brief Integer factorization and the multiplicative functions built on it.
 *
 * Trial division strips primes below 1000; whatever is left is split with
 * Brent's variant of Pollard rho. The rho iterations are charged against a
 * caller-supplied budget so that a hard input fails with FactorizationFailed
 * instead of running indefinitely.
 */

#include "abelian/bigint.hpp"
#include "abelian/error.hpp"
#include "abelian/modular.hpp"
#include "abelian/primality.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace abelian {

inline constexpr std::uint64_t kDefaultFactoringBudget = 50'000'000;

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer with its complete prime factorization.
/// Primes are strictly increasing; exponents are at least 1.
struct Factorization {
    Int value = 1;
    std::vector<PrimePower> factors;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Assembles a factorization from a prime -> exponent map; no primality check.
inline Factorization make_factorization(const std::map<Int, unsigned>& powers) {
    Factorization f;
    for (const auto& [p, e] : powers) {
        if (e == 0) continue;
        f.factors.push_back({p, e});
        f.value *= pow(p, e);
    }
    return f;
}

namespace detail {

class RhoBudget {
public:
    explicit RhoBudget(std::uint64_t limit) : left_(limit) {}

    void charge(std::uint64_t steps, const Int& n) {
        if (steps > left_)
            throw error(errc::factorization_failed, "effort budget exhausted while splitting " + to_string(n));
        left_ -= steps;
    }

private:
    std::uint64_t left_;
};

inline std::uint64_t rho_mul(std::uint64_t a, std::uint64_t b, std::uint64_t n) { return mul_mod(a, b, n); }
inline Int rho_mul(const Int& a, const Int& b, const Int& n) { return a * b % n; }
inline std::uint64_t rho_gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
inline Int rho_gcd(const Int& a, const Int& b) { return gcd(a, b); }

/// Brent's cycle-finding rho with polynomial x^2 + c. May return n on failure.
template <class T>
T brent_rho(const T& n, const T& c, RhoBudget& budget) {
    auto step = [&](const T& x) {
        T y = rho_mul(x, x, n) + c;
        if (y >= n) y -= n;
        return y;
    };
    auto distance = [](const T& a, const T& b) { return a > b ? T(a - b) : T(b - a); };

    constexpr unsigned kBatch = 128;
    T y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        budget.charge(r, Int(n));
        for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            const std::uint64_t run = std::min<std::uint64_t>(kBatch, r - k);
            for (std::uint64_t i = 0; i < run; ++i) {
                y = step(y);
                q = rho_mul(q, distance(x, y), n);
            }
            budget.charge(run, Int(n));
            g = rho_gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = rho_gcd(distance(x, ys), n);
            budget.charge(1, Int(n));
        } while (g == 1);
    }
    return g;
}

/// Non-trivial divisor of an odd composite n.
inline Int split(const Int& n, RhoBudget& budget) {
    for (unsigned c = 1;; ++c) {
        Int g;
        if (fits_u64(n))
            g = Int(brent_rho<std::uint64_t>(to_u64(n), c, budget));
        else
            g = brent_rho<Int>(n, Int(c), budget);
        if (g != 1 && g != n) return g;
    }
}

}  // namespace detail

/// Complete factorization of n >= 1. Every reported prime passes is_prime.
inline Factorization factorize(const Int& n, std::uint64_t budget = kDefaultFactoringBudget) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::map<Int, unsigned> powers;
    Int rest = n;

    auto strip = [&](std::uint64_t p) {
        while (rest % p == 0) {
            rest /= p;
            ++powers[Int(p)];
        }
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p < 1000 && Int(p) * p <= rest; p += 6) {
        strip(p);
        strip(p + 2);
    }

    detail::RhoBudget rho_budget(budget);
    std::vector<Int> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        Int m = std::move(pending.back());
        pending.pop_back();
        if (m < Int(1000) * 1000 || is_prime(m)) {
            // below 10^6 every cofactor left by trial division is prime
            ++powers[m];
            continue;
        }
        Int a = detail::split(m, rho_budget);
        Int b = m / a;
        pending.push_back(std::move(a));
        pending.push_back(std::move(b));
    }
    return make_factorization(powers);
}

inline Factorization factorize(std::uint64_t n, std::uint64_t budget = kDefaultFactoringBudget) {
    return factorize(Int(n), budget);
}

/// |U_n| = prod p^(e-1) (p - 1).
inline Int euler_phi(const Factorization& f) {
    Int phi = 1;
    for (const auto& [p, e] : f.factors) phi *= pow(p, e - 1) * (p - 1);
    return phi;
}

/// Exponent of the cyclic component(s) contributed by p^e to U_n.
inline Int prime_power_lambda(const Int& p, unsigned e) {
    if (p == 2) {
        if (e == 1) return 1;
        if (e == 2) return 2;
        return pow(Int(2), e - 2);
    }
    return pow(p, e - 1) * (p - 1);
}

/// Carmichael function: exponent of U_n.
inline Int carmichael_lambda(const Factorization& f) {
    Int lambda = 1;
    for (const auto& [p, e] : f.factors) lambda = lcm(lambda, prime_power_lambda(p, e));
    return lambda;
}

/// All positive divisors in ascending order.
inline std::vector<Int> divisors(const Factorization& f) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace abelian
