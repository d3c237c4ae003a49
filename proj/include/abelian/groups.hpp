#pragma once

/**
 * @file groups.hpp
 * @brief Finite abelian groups identified by their invariant factors.
 *
 * A group is presented as a direct product Z_{a_1} x ... x Z_{a_r} of cyclic
 * groups in any order. normalize() brings such a presentation to the unique
 * divisor chain m_1, ..., m_k with m_i >= 2 and m_{i+1} | m_i. The route goes
 * through elementary divisors: each modulus is split into prime powers, the
 * powers of each prime are sorted descending, and m_i collects the i-th
 * largest power of every prime.
 */

#include "abelian/bigint.hpp"
#include "abelian/error.hpp"
#include "abelian/factorize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace abelian {

/// User-supplied cyclic moduli, any order, possibly redundant.
/// An empty list is the trivial group.
struct GroupPresentation {
    std::vector<Int> moduli;
};

/// Canonical divisor chain m_1 >= m_2 >= ... with m_{i+1} | m_i and m_i >= 2.
/// The empty chain is the trivial group.
class InvariantFactors {
public:
    InvariantFactors() = default;

    /// Validates the chain condition; throws InvalidModulus otherwise.
    static InvariantFactors from_chain(std::vector<Int> chain) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i] < 2) throw error(errc::invalid_modulus, "invariant factor " + to_string(chain[i]) + " < 2");
            if (i > 0 && chain[i - 1] % chain[i] != 0)
                throw error(errc::invalid_modulus,
                            to_string(chain[i]) + " does not divide " + to_string(chain[i - 1]));
        }
        InvariantFactors out;
        out.factors_ = std::move(chain);
        return out;
    }

    const std::vector<Int>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    bool trivial() const noexcept { return factors_.empty(); }
    const Int& operator[](std::size_t i) const { return factors_[i]; }

    friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;

private:
    std::vector<Int> factors_;
};

/// |G| = prod m_i; 1 for the trivial group.
inline Int order(const InvariantFactors& g) { return product(g.factors()); }

namespace detail {

using ElementaryDivisors = std::map<Int, std::vector<unsigned>>;

inline void add_elementary_divisors(const Int& cyclic_order, ElementaryDivisors& into, std::uint64_t budget) {
    if (cyclic_order <= 1) return;
    for (const auto& [p, e] : factorize(cyclic_order, budget).factors) into[p].push_back(e);
}

inline InvariantFactors assemble_chain(ElementaryDivisors divisors) {
    std::size_t k = 0;
    for (auto& [p, exps] : divisors) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        k = std::max(k, exps.size());
    }
    std::vector<Int> chain(k, Int(1));
    for (const auto& [p, exps] : divisors)
        for (std::size_t i = 0; i < exps.size(); ++i) chain[i] *= pow(p, exps[i]);
    return InvariantFactors::from_chain(std::move(chain));
}

}  // namespace detail

/// Invariant factors of Z_{c_1} x ... x Z_{c_r}; entries equal to 1 are dropped.
inline InvariantFactors invariant_factors_of(const std::vector<Int>& cyclic_orders,
                                             std::uint64_t budget = kDefaultFactoringBudget) {
    detail::ElementaryDivisors divisors;
    for (const auto& c : cyclic_orders) {
        if (c < 1) throw error(errc::invalid_modulus, "cyclic order " + to_string(c) + " < 1");
        detail::add_elementary_divisors(c, divisors, budget);
    }
    return detail::assemble_chain(std::move(divisors));
}

/// Invariant factors from prime -> exponent multiset.
inline InvariantFactors from_elementary_divisors(std::map<Int, std::vector<unsigned>> divisors) {
    return detail::assemble_chain(std::move(divisors));
}

inline InvariantFactors normalize(const GroupPresentation& g, std::uint64_t budget = kDefaultFactoringBudget) {
    for (const auto& m : g.moduli)
        if (m < 2) throw error(errc::invalid_modulus, "modulus " + to_string(m) + " < 2");
    return invariant_factors_of(g.moduli, budget);
}

inline bool isomorphic(const GroupPresentation& a, const GroupPresentation& b) {
    return normalize(a) == normalize(b);
}

/// "Z42 x Z3"; the trivial group prints as "1".
inline std::string format_group(const InvariantFactors& g) {
    if (g.trivial()) return "1";
    std::string out;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i > 0) out += " x ";
        out += "Z" + to_string(g[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const InvariantFactors& g) { return os << format_group(g); }

/// "42x3", the compact form used in CSV cells; "1" for the trivial group.
inline std::string format_factors_compact(const InvariantFactors& g) {
    if (g.trivial()) return "1";
    std::string out;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i > 0) out += "x";
        out += to_string(g[i]);
    }
    return out;
}

}  // namespace abelian
