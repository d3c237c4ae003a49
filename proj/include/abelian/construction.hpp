#pragma once

/**
 * @file construction.hpp
 * @brief Unconditional realization of a finite abelian group as U_n^(d).
 *
 * Given invariant factors m_1, ..., m_k, pick distinct primes
 *
 *     p_i == 1 + m_1 m_i  (mod m_1^2 m_i),
 *
 * write p_i - 1 = m_1 m_i y_i with y_i = 1 + m_1 u_i, and set
 * d = m_1 y_1 ... y_k and n = p_1 ... p_k. Because every y_j is 1 mod m_1 and
 * m_i | m_1, gcd(m_i, prod_{j != i} y_j) = 1, hence gcd(p_i - 1, d) = m_1 y_i
 * and U_{p_i}^(d) is cyclic of order m_i. Chinese remaindering glues the
 * components into U_n^(d).
 *
 * A Realization records (p_i, u_i, y_i, D_i) so that check_certificate() can
 * re-derive every identity from the group and the primes alone.
 */

#include "abelian/bigint.hpp"
#include "abelian/error.hpp"
#include "abelian/factorize.hpp"
#include "abelian/groups.hpp"
#include "abelian/primality.hpp"
#include "abelian/progression.hpp"
#include "abelian/residue_structure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelian {

enum class Method { paper_construction, common_d, minimal, external };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::paper_construction: return "paper-construction";
        case Method::common_d: return "common-d";
        case Method::minimal: return "minimal";
        case Method::external: return "external";
    }
    return "unknown";
}

struct Witness {
    Int prime;
    Int u;
    Int y;
    Int D;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Realization {
    InvariantFactors group;
    Int n = 1;
    Int d = 1;
    std::vector<Witness> witnesses;
    Method method = Method::external;
};

/// Default search bound for one progression: modulus^6.
inline Int default_prime_cap(const Int& progression_modulus) { return pow(progression_modulus, 6); }

/// Factorization of a product of distinct primes.
inline Factorization factorization_of_primes(const std::vector<Int>& primes) {
    std::map<Int, unsigned> powers;
    for (const auto& p : primes) ++powers[p];
    return make_factorization(powers);
}

/// Distinct primes p_i == 1 + m_1 m_i (mod m_1^2 m_i), each the smallest in its
/// progression not already taken by an earlier index.
inline std::vector<Int> lemma_primes(const InvariantFactors& m, const std::optional<Int>& cap = std::nullopt) {
    if (m.trivial()) throw std::invalid_argument("lemma_primes: needs at least one invariant factor");
    const Int& m1 = m[0];
    std::vector<Int> primes;
    std::set<Int> taken;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        const Int residue = 1 + m1 * m[i];
        const Int modulus = m1 * m1 * m[i];
        if (gcd(residue, modulus) != 1) throw std::logic_error("lemma_primes: progression is not coprime");
        const Int limit = cap.value_or(default_prime_cap(modulus));

        Int lower = 0;
        for (;;) {
            if (lower >= limit)
                throw error(errc::search_bound_exceeded,
                            "no unused prime == " + to_string(residue) + " mod " + to_string(modulus) +
                                " below " + to_string(limit));
            Int p = find_prime_in_progression(residue, modulus, lower, limit);
            if (taken.insert(p).second) {
                primes.push_back(std::move(p));
                break;
            }
            lower = std::move(p);
        }
    }
    return primes;
}

/// Derives (u_i, y_i, D_i) and d from the group and its primes. Returns
/// nullopt if a prime is not in the required progression.
inline std::optional<std::pair<std::vector<Witness>, Int>> derive_witnesses(const InvariantFactors& m,
                                                                            const std::vector<Int>& primes) {
    if (primes.size() != m.rank() || m.trivial()) return std::nullopt;
    const Int& m1 = m[0];
    std::vector<Witness> out;
    Int d = m1;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        const Int step = m1 * m[i];
        const Int pm1 = primes[i] - 1;
        if (pm1 <= 0 || pm1 % step != 0) return std::nullopt;
        const Int y = pm1 / step;
        if ((y - 1) % m1 != 0) return std::nullopt;
        out.push_back({primes[i], (y - 1) / m1, y, 0});
        d *= y;
    }
    for (std::size_t i = 0; i < m.rank(); ++i) {
        Int others = 1;
        for (std::size_t j = 0; j < m.rank(); ++j)
            if (j != i) others *= out[j].y;
        out[i].D = gcd(m[i], others);
    }
    return std::make_pair(std::move(out), std::move(d));
}

/// Realization of the group via the congruence construction. The trivial
/// group maps to (n, d) = (2, 1).
inline Realization construct(const InvariantFactors& m, const std::optional<Int>& cap = std::nullopt) {
    Realization r;
    r.group = m;
    r.method = Method::paper_construction;
    if (m.trivial()) {
        r.n = 2;
        r.d = 1;
        return r;
    }
    const std::vector<Int> primes = lemma_primes(m, cap);
    auto derived = derive_witnesses(m, primes);
    if (!derived) throw std::logic_error("construct: lemma primes left their progressions");
    r.witnesses = std::move(derived->first);
    r.d = std::move(derived->second);
    r.n = product(primes);

    for (std::size_t i = 0; i < m.rank(); ++i) {
        const Witness& w = r.witnesses[i];
        const Int g = gcd(w.prime - 1, r.d);
        if (w.D != 1 || g != m[0] * w.y || (w.prime - 1) / g != m[i])
            throw std::logic_error("construct: certificate identity failed for p = " + to_string(w.prime));
    }
    return r;
}

/// True iff U_n^(d) has exactly the invariant factors of `group`.
inline bool realizes(const InvariantFactors& group, const Int& n, const Int& d,
                     std::uint64_t budget = kDefaultFactoringBudget) {
    if (n < 1 || d < 1) return false;
    return structure_of_power_subgroup(factorize(n, budget), d, budget).invariants == group;
}

/// Re-derives every identity of the construction from r.group and the
/// witness primes, then confirms the structure of U_n^(d) equals r.group.
inline bool check_certificate(const Realization& r, std::uint64_t budget = kDefaultFactoringBudget) {
    try {
        const InvariantFactors& m = r.group;
        if (m.trivial()) return r.witnesses.empty() && realizes(m, r.n, r.d, budget);
        if (r.witnesses.size() != m.rank()) return false;

        std::vector<Int> primes;
        for (const auto& w : r.witnesses) primes.push_back(w.prime);
        if (std::set<Int>(primes.begin(), primes.end()).size() != primes.size()) return false;
        for (const auto& p : primes)
            if (!is_prime(p)) return false;

        auto derived = derive_witnesses(m, primes);
        if (!derived) return false;
        const auto& [expected, d] = *derived;
        if (expected != r.witnesses) return false;
        if (d != r.d || product(primes) != r.n) return false;

        for (std::size_t i = 0; i < m.rank(); ++i) {
            const Witness& w = expected[i];
            if (w.D != 1) return false;
            const Int g = gcd(w.prime - 1, d);
            if (g != m[0] * w.y) return false;
            if ((w.prime - 1) / g != m[i]) return false;
        }
        return structure_of_power_subgroup(factorization_of_primes(primes), d, budget).invariants == m;
    } catch (const error&) {
        return false;
    }
}

}  // namespace abelian
