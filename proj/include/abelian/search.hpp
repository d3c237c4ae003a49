#pragma once

/**
 * @file search.hpp
 * @brief Alternative realizations: common exponent search, exhaustive minimal
 * search, and survey tables over all groups up to a given order.
 */

#include "abelian/bigint.hpp"
#include "abelian/construction.hpp"
#include "abelian/error.hpp"
#include "abelian/factorize.hpp"
#include "abelian/groups.hpp"
#include "abelian/primality.hpp"
#include "abelian/residue_structure.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace abelian {

struct SearchConfig {
    Int d_max = 1'000'000;
    Int n_max = 100'000;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::uint64_t factoring_budget = kDefaultFactoringBudget;
    /// Per-progression bound for the construction; modulus^6 when unset.
    std::optional<Int> prime_cap;
    unsigned threads = 1;
};

/// Smallest d <= d_max with every m_i d + 1 prime. Repeated invariant factors
/// would force equal primes, so they are rejected with InfeasibleCommonD.
inline Realization common_d_search(const InvariantFactors& m, const SearchConfig& cfg = {}) {
    if (m.trivial()) throw std::invalid_argument("common_d_search: needs at least one invariant factor");
    for (std::size_t i = 1; i < m.rank(); ++i)
        if (m[i] == m[i - 1])
            throw error(errc::infeasible_common_d, "repeated invariant factor " + to_string(m[i]));

    std::vector<Int> primes(m.rank());
    for (Int d = 1; d <= cfg.d_max; ++d) {
        bool all_prime = true;
        for (std::size_t i = 0; i < m.rank() && all_prime; ++i) {
            primes[i] = m[i] * d + 1;
            all_prime = is_prime(primes[i]);
        }
        if (!all_prime) continue;

        Realization r;
        r.group = m;
        r.d = d;
        r.n = product(primes);
        r.method = Method::common_d;
        for (const auto& p : primes) r.witnesses.push_back({p, 0, 1, 1});
        return r;
    }
    throw error(errc::search_bound_exceeded, "no common d <= " + to_string(cfg.d_max));
}

/// Lexicographically least (n, d) with n <= n_max and U_n^(d) isomorphic to m.
/// Only divisors of lambda(n) are tried for d: the structure depends on d
/// through gcd(d, c) for component orders c | lambda(n).
inline Realization minimal_realization(const InvariantFactors& m, const SearchConfig& cfg = {}) {
    const Int target = order(m);
    const Int exponent = m.trivial() ? Int(1) : m[0];
    for (Int n = 1; n <= cfg.n_max; ++n) {
        const Factorization f = factorize(n, cfg.factoring_budget);
        if (euler_phi(f) % target != 0) continue;
        const Int lambda = carmichael_lambda(f);
        if (lambda % exponent != 0) continue;
        const std::vector<Int> components = unit_group_components(f);
        if (components.size() < m.rank()) continue;

        for (const Int& d : divisors(factorize(lambda, cfg.factoring_budget))) {
            Int size = 1;
            for (const auto& c : components) size *= c / gcd(c, d);
            if (size != target) continue;
            if (structure_of_power_subgroup(f, d, cfg.factoring_budget).invariants != m) continue;
            Realization r;
            r.group = m;
            r.n = n;
            r.d = d;
            r.method = Method::minimal;
            return r;
        }
    }
    throw error(errc::search_bound_exceeded, "no realization with n <= " + to_string(cfg.n_max));
}

namespace detail {

inline void partitions(unsigned remaining, unsigned largest, std::vector<unsigned>& prefix,
                       std::vector<std::vector<unsigned>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
        prefix.push_back(part);
        partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Descending partitions of e, largest-first.
inline std::vector<std::vector<unsigned>> integer_partitions(unsigned e) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> prefix;
    detail::partitions(e, e, prefix, out);
    return out;
}

/// Survey row ordering: ascending order, then factor sequences compared
/// lexicographically with the larger sequence first (the cyclic group leads).
inline bool survey_before(const InvariantFactors& a, const InvariantFactors& b) {
    const Int oa = order(a), ob = order(b);
    if (oa != ob) return oa < ob;
    return std::lexicographical_compare(b.factors().begin(), b.factors().end(), a.factors().begin(),
                                        a.factors().end());
}

/// Every abelian group of order exactly n, one per isomorphism class.
inline std::vector<InvariantFactors> groups_of_order(const Int& n) {
    const Factorization f = factorize(n);
    std::vector<std::map<Int, std::vector<unsigned>>> combos{{}};
    for (const auto& [p, e] : f.factors) {
        std::vector<std::map<Int, std::vector<unsigned>>> next;
        for (const auto& partial : combos) {
            for (const auto& part : integer_partitions(e)) {
                auto extended = partial;
                extended[p] = part;
                next.push_back(std::move(extended));
            }
        }
        combos = std::move(next);
    }
    std::vector<InvariantFactors> out;
    for (auto& c : combos) out.push_back(from_elementary_divisors(std::move(c)));
    std::sort(out.begin(), out.end(), survey_before);
    return out;
}

/// Every non-trivial abelian group of order at most order_max, in survey order.
inline std::vector<InvariantFactors> groups_up_to(std::uint64_t order_max) {
    std::vector<InvariantFactors> out;
    for (std::uint64_t n = 2; n <= order_max; ++n) {
        auto batch = groups_of_order(Int(n));
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

struct SurveyRow {
    InvariantFactors group;
    std::optional<Realization> construction;
    std::optional<Realization> common_d;
    std::optional<Realization> minimal;
    /// Empty when every search succeeded; otherwise "stage:reason" entries.
    std::vector<std::string> failures;

    std::string status() const {
        if (failures.empty()) return "ok";
        std::string s;
        for (std::size_t i = 0; i < failures.size(); ++i) s += (i ? ";" : "") + failures[i];
        return s;
    }
};

namespace detail {

inline std::string failure_reason(errc code) {
    switch (code) {
        case errc::infeasible_common_d: return "infeasible";
        case errc::search_bound_exceeded: return "bound-exceeded";
        case errc::factorization_failed: return "factorization-failed";
        default: return errc_name(code);
    }
}

template <class F>
std::optional<Realization> attempt(const char* stage, F&& run, std::vector<std::string>& failures) {
    try {
        return run();
    } catch (const error& e) {
        failures.push_back(std::string(stage) + ":" + failure_reason(e.code()));
    } catch (const std::exception&) {
        failures.push_back(std::string(stage) + ":error");
    }
    return std::nullopt;
}

}  // namespace detail

inline SurveyRow survey_row(const InvariantFactors& g, const SearchConfig& cfg) {
    SurveyRow row;
    row.group = g;
    row.construction = detail::attempt("construct", [&] { return construct(g, cfg.prime_cap); }, row.failures);
    row.common_d = detail::attempt("common-d", [&] { return common_d_search(g, cfg); }, row.failures);
    row.minimal = detail::attempt("minimal", [&] { return minimal_realization(g, cfg); }, row.failures);
    return row;
}

/// One row per abelian group of order <= order_max. Rows are computed on
/// cfg.threads workers and stored by index, so output order never depends on
/// scheduling.
inline std::vector<SurveyRow> survey(std::uint64_t order_max, const SearchConfig& cfg = {}) {
    if (order_max < 1) throw std::invalid_argument("survey: order_max must be >= 1");
    const std::vector<InvariantFactors> groups = groups_up_to(order_max);
    std::vector<SurveyRow> rows(groups.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < groups.size(); i = next++) rows[i] = survey_row(groups[i], cfg);
    };
    const unsigned threads = std::max(1u, cfg.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

}  // namespace abelian
