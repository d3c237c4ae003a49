#pragma once

/**
 * @file residue_structure.hpp
 * @brief Structure of U_n and of its subgroup of d-th powers U_n^(d).
 *
 * Two independent routes are provided. The formula route works from the
 * factorization of n: U_n is the product of the U_{p^e}, each cyclic of
 * order p^(e-1)(p-1) for odd p, while U_{2^e} is trivial, Z_2, or
 * Z_2 x Z_{2^(e-2)}. Raising a cyclic group of order c to the d-th power
 * leaves a cyclic group of order c / gcd(c, d).
 *
 * The enumeration route never looks at the factorization of n. It lists
 * { a^d mod n : gcd(a, n) = 1 } directly and reads off the q-primary parts
 * from torsion counts: with N(q^j) the number of x in the set satisfying
 * x^(q^j) = 1, the ratio N(q^j) / N(q^(j-1)) equals q^r where r is the number
 * of elementary divisors q^e with e >= j.
 */

#include "abelian/bigint.hpp"
#include "abelian/error.hpp"
#include "abelian/factorize.hpp"
#include "abelian/groups.hpp"
#include "abelian/modular.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace abelian {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct StructureResult {
    Int n;
    Int d;
    /// One entry per cyclic factor before normalization; may contain 1s.
    std::vector<Int> cyclic_components;
    InvariantFactors invariants;
    Int subgroup_order;
};

/// Orders of the cyclic factors of U_n, one per prime power (two for 2^e, e >= 3).
inline std::vector<Int> unit_group_components(const Factorization& f) {
    std::vector<Int> components;
    for (const auto& [p, e] : f.factors) {
        if (p == 2) {
            if (e == 2) components.push_back(2);
            if (e >= 3) {
                components.push_back(2);
                components.push_back(pow(Int(2), e - 2));
            }
        } else {
            components.push_back(pow(p, e - 1) * (p - 1));
        }
    }
    return components;
}

inline StructureResult structure_of_power_subgroup(const Factorization& f, const Int& d,
                                                   std::uint64_t budget = kDefaultFactoringBudget) {
    if (d < 1) throw std::invalid_argument("structure_of_power_subgroup: d must be >= 1");
    StructureResult out;
    out.n = f.value;
    out.d = d;
    out.cyclic_components = unit_group_components(f);
    for (auto& c : out.cyclic_components) c /= gcd(c, d);
    out.subgroup_order = product(out.cyclic_components);
    out.invariants = invariant_factors_of(out.cyclic_components, budget);
    return out;
}

inline StructureResult structure_of_unit_group(const Factorization& f, std::uint64_t budget = kDefaultFactoringBudget) {
    return structure_of_power_subgroup(f, Int(1), budget);
}

namespace detail {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace detail

/// The set { a^d mod n : 1 <= a <= n, gcd(a, n) = 1 }, ascending.
inline std::vector<std::uint64_t> power_subgroup_elements(std::uint64_t n, const Int& d) {
    if (n == 1) return {0};
    std::vector<char> member(n, 0);
    for (std::uint64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) member[pow_mod(a, d, n)] = 1;
    std::vector<std::uint64_t> elements;
    for (std::uint64_t x = 0; x < n; ++x)
        if (member[x]) elements.push_back(x);
    return elements;
}

/// Structure of U_n^(d) by direct enumeration; independent of any factorization of n.
inline StructureResult enumerate_power_subgroup(const Int& n, const Int& d,
                                                std::uint64_t size_cap = kDefaultEnumerationCap) {
    if (n < 1) throw std::invalid_argument("enumerate_power_subgroup: n must be >= 1");
    if (d < 1) throw std::invalid_argument("enumerate_power_subgroup: d must be >= 1");
    if (n > Int(size_cap))
        throw error(errc::enumeration_too_large,
                    "n = " + to_string(n) + " exceeds enumeration cap " + std::to_string(size_cap));

    const std::uint64_t modulus = to_u64(n);
    const std::vector<std::uint64_t> elements = power_subgroup_elements(modulus, d);
    const std::uint64_t size = elements.size();
    const std::uint64_t identity = 1 % modulus;

    std::map<Int, std::vector<unsigned>> divisors;
    for (const auto& [q, v] : detail::trial_factor(size)) {
        std::uint64_t sylow = 1;
        for (unsigned i = 0; i < v; ++i) sylow *= q;

        // ranks[j-1] = #{elementary divisors q^e with e >= j}
        std::vector<unsigned> ranks;
        std::vector<std::uint64_t> powered = elements;
        std::uint64_t previous = 1;
        while (previous < sylow) {
            std::uint64_t count = 0;
            for (auto& x : powered) {
                x = pow_mod(x, q, modulus);
                if (x == identity) ++count;
            }
            std::uint64_t ratio = count / previous;
            unsigned rank = 0;
            while (ratio > 1) {
                ratio /= q;
                ++rank;
            }
            ranks.push_back(rank);
            previous = count;
        }
        auto& exps = divisors[Int(q)];
        for (std::size_t j = 0; j < ranks.size(); ++j) {
            const unsigned next = j + 1 < ranks.size() ? ranks[j + 1] : 0;
            for (unsigned t = next; t < ranks[j]; ++t) exps.push_back(static_cast<unsigned>(j + 1));
        }
    }

    StructureResult out;
    out.n = n;
    out.d = d;
    for (const auto& [q, exps] : divisors)
        for (unsigned e : exps) out.cyclic_components.push_back(pow(q, e));
    out.subgroup_order = size;
    out.invariants = from_elementary_divisors(std::move(divisors));
    return out;
}

/// Smallest primitive root modulo an odd prime p.
inline Int smallest_primitive_root(const Int& p, std::uint64_t budget = kDefaultFactoringBudget) {
    if (p == 2) return 1;
    const Int group_order = p - 1;
    const Factorization f = factorize(group_order, budget);
    for (Int g = 2;; ++g) {
        bool primitive = true;
        for (const auto& pp : f.factors) {
            if (mod_pow(g, group_order / pp.prime, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
}

struct Generator {
    Int element;
    Int order;
};

/// One generator per prime of an odd squarefree n: h_i = g_i^d mod p_i and
/// h_i = 1 modulo n / p_i, where g_i is the smallest primitive root mod p_i.
inline std::vector<Generator> generators(const Factorization& f, const Int& d,
                                         std::uint64_t budget = kDefaultFactoringBudget) {
    if (d < 1) throw std::invalid_argument("generators: d must be >= 1");
    for (const auto& [p, e] : f.factors) {
        if (p == 2 || e != 1)
            throw error(errc::unsupported_modulus, "generators need odd squarefree n, got " + to_string(f.value));
    }
    std::vector<Generator> out;
    for (const auto& [p, e] : f.factors) {
        const Int g = smallest_primitive_root(p, budget);
        const Int local = mod_pow(g, d, p);
        const Int cofactor = f.value / p;
        Int h = cofactor == 1 ? local : crt_combine({{local, p}, {Int(1), cofactor}});
        out.push_back({std::move(h), (p - 1) / gcd(p - 1, d)});
    }
    return out;
}

}  // namespace abelian
