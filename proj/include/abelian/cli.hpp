#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end shared by the `abelian` tool and its tests.
 *
 * Exit codes: 0 success, 1 domain failure (search bound, infeasible mode,
 * failed verification), 2 usage or parse error.
 */

#include "abelian/bigint.hpp"
#include "abelian/construction.hpp"
#include "abelian/error.hpp"
#include "abelian/group_spec.hpp"
#include "abelian/groups.hpp"
#include "abelian/residue_structure.hpp"
#include "abelian/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelian::cli {

using json = nlohmann::ordered_json;

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int parse_positive(const std::string& text, const char* what) {
    Int value;
    if (!parse_decimal(text, value) || value < 1)
        throw usage_error(std::string(what) + " must be a positive decimal integer, got '" + text + "'");
    return value;
}

inline json int_array(const std::vector<Int>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_string(x));
    return a;
}

inline std::string join(const std::vector<Int>& xs, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + to_string(xs[i]);
    return s;
}

inline std::string residue_notation(const Int& n, const Int& d) {
    return "U_" + to_string(n) + "^(" + to_string(d) + ")";
}

/// Witness primes when present, otherwise the prime divisors of n.
inline std::vector<Int> realization_primes(const Realization& r, std::uint64_t budget) {
    std::vector<Int> primes;
    if (!r.witnesses.empty()) {
        for (const auto& w : r.witnesses) primes.push_back(w.prime);
        return primes;
    }
    for (const auto& pp : factorize(r.n, budget).factors) primes.push_back(pp.prime);
    return primes;
}

inline void emit_realization(const Realization& r, bool verified, bool as_json, std::uint64_t budget,
                             std::ostream& out) {
    const std::vector<Int> primes = realization_primes(r, budget);
    std::vector<Int> ys;
    if (r.method == Method::paper_construction)
        for (const auto& w : r.witnesses) ys.push_back(w.y);

    if (as_json) {
        json j;
        j["group"] = int_array(r.group.factors());
        j["n"] = to_string(r.n);
        j["d"] = to_string(r.d);
        j["primes"] = int_array(primes);
        j["y"] = int_array(ys);
        j["method"] = method_name(r.method);
        j["verified"] = verified;
        out << j.dump() << '\n';
        return;
    }
    out << "group: " << format_group(r.group) << '\n';
    out << "method: " << method_name(r.method) << '\n';
    out << "primes: " << join(primes) << '\n';
    if (!ys.empty()) out << "y: " << join(ys) << '\n';
    out << "n: " << to_string(r.n) << '\n';
    out << "d: " << to_string(r.d) << '\n';
    out << "realization: " << format_group(r.group) << " ~= " << residue_notation(r.n, r.d) << '\n';
    out << "verified: " << (verified ? "yes" : "no") << '\n';
}

inline json structure_json(const StructureResult& s, std::optional<bool> cross_checked) {
    json j;
    j["n"] = to_string(s.n);
    j["d"] = to_string(s.d);
    j["cyclic_components"] = int_array(s.cyclic_components);
    j["invariants"] = int_array(s.invariants.factors());
    j["subgroup_order"] = to_string(s.subgroup_order);
    j["cross_checked"] = cross_checked.value_or(false);
    return j;
}

inline void emit_structure(const StructureResult& s, std::optional<bool> cross_checked, bool as_json,
                           std::ostream& out) {
    if (as_json) {
        out << structure_json(s, cross_checked).dump() << '\n';
        return;
    }
    out << residue_notation(s.n, s.d) << " ~= " << format_group(s.invariants) << '\n';
    out << "components: " << join(s.cyclic_components) << '\n';
    out << "order: " << to_string(s.subgroup_order) << '\n';
    out << "cross-check: " << (cross_checked ? "enumeration and formula agree" : "skipped (n above --enum-cap)")
        << '\n';
}

inline std::string cell(const std::optional<Realization>& r, const Int Realization::*field) {
    return r ? to_string((*r).*field) : std::string();
}

inline void emit_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& out) {
    out << "order,invariant_factors,construct_n,construct_d,commond_d,commond_n,minimal_n,minimal_d,status\n";
    for (const auto& row : rows) {
        out << to_string(order(row.group)) << ',' << format_factors_compact(row.group) << ','
            << cell(row.construction, &Realization::n) << ',' << cell(row.construction, &Realization::d) << ','
            << cell(row.common_d, &Realization::d) << ',' << cell(row.common_d, &Realization::n) << ','
            << cell(row.minimal, &Realization::n) << ',' << cell(row.minimal, &Realization::d) << ','
            << row.status() << '\n';
    }
}

inline void emit_survey_json(const std::vector<SurveyRow>& rows, std::ostream& out) {
    auto pair = [](const std::optional<Realization>& r) -> json {
        if (!r) return nullptr;
        json j;
        j["n"] = to_string(r->n);
        j["d"] = to_string(r->d);
        return j;
    };
    json a = json::array();
    for (const auto& row : rows) {
        json j;
        j["order"] = to_string(order(row.group));
        j["group"] = int_array(row.group.factors());
        j["construct"] = pair(row.construction);
        j["common_d"] = pair(row.common_d);
        j["minimal"] = pair(row.minimal);
        j["status"] = row.status();
        a.push_back(std::move(j));
    }
    out << a.dump(2) << '\n';
}

/// Structure by formula, cross-checked against enumeration when n is small
/// enough. A disagreement is an internal fault and throws.
inline std::pair<StructureResult, bool> checked_structure(const Int& n, const Int& d, const SearchConfig& cfg) {
    StructureResult formula = structure_of_power_subgroup(factorize(n, cfg.factoring_budget), d, cfg.factoring_budget);
    if (n > Int(cfg.enumeration_cap)) return {std::move(formula), false};
    const StructureResult counted = enumerate_power_subgroup(n, d, cfg.enumeration_cap);
    if (counted.invariants != formula.invariants || counted.subgroup_order != formula.subgroup_order)
        throw std::logic_error("formula and enumeration disagree for " + residue_notation(n, d) + ": " +
                               format_group(formula.invariants) + " vs " + format_group(counted.invariants));
    return {std::move(formula), true};
}

}  // namespace detail

/// Runs the tool with `args` (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Realize finite abelian groups as groups of d-th power residues U_n^(d)", "abelian"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string d_max, n_max, cap, enum_cap, out_path;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "Emit JSON instead of text");
    app.add_option("--d-max", d_max, "Largest d tried by common-d search");
    app.add_option("--n-max", n_max, "Largest n tried by minimal search");
    app.add_option("--cap", cap, "Upper bound for each prime search of the construction");
    app.add_option("--enum-cap", enum_cap, "Largest n handled by brute-force enumeration");
    app.add_option("--out", out_path, "Write output to this file");
    app.add_option("--threads", threads, "Worker threads for survey")->check(CLI::PositiveNumber);

    std::string spec, n_text, d_text;
    std::uint64_t order_max = 16;
    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    CLI::App* normalize_cmd = add("normalize", "Print the invariant factors of a group");
    normalize_cmd->add_option("spec", spec, "Group, e.g. Z3xZ42")->required();
    CLI::App* construct_cmd = add("construct", "Congruence construction of (n, d)");
    construct_cmd->add_option("spec", spec)->required();
    CLI::App* common_cmd = add("common-d", "Smallest common d with every m_i d + 1 prime");
    common_cmd->add_option("spec", spec)->required();
    CLI::App* minimal_cmd = add("minimal", "Lexicographically least (n, d)");
    minimal_cmd->add_option("spec", spec)->required();
    CLI::App* structure_cmd = add("structure", "Structure of U_n^(d) from the factorization of n");
    structure_cmd->add_option("n", n_text)->required();
    structure_cmd->add_option("d", d_text)->required();
    CLI::App* enumerate_cmd = add("enumerate", "Structure of U_n^(d) by brute-force enumeration");
    enumerate_cmd->add_option("n", n_text)->required();
    enumerate_cmd->add_option("d", d_text)->required();
    CLI::App* verify_cmd = add("verify", "Check whether a group is isomorphic to U_n^(d)");
    verify_cmd->add_option("spec", spec)->required();
    verify_cmd->add_option("n", n_text)->required();
    verify_cmd->add_option("d", d_text)->required();
    CLI::App* survey_cmd = add("survey", "Table of realizations for all groups up to a given order");
    survey_cmd->add_option("order_max", order_max, "Largest group order (default 16)")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "abelian: " << e.what() << '\n';
        return 2;
    }

    try {
        SearchConfig cfg;
        if (!d_max.empty()) cfg.d_max = detail::parse_positive(d_max, "--d-max");
        if (!n_max.empty()) cfg.n_max = detail::parse_positive(n_max, "--n-max");
        if (!cap.empty()) cfg.prime_cap = detail::parse_positive(cap, "--cap");
        if (!enum_cap.empty()) {
            const Int v = detail::parse_positive(enum_cap, "--enum-cap");
            if (!fits_u64(v)) throw detail::usage_error("--enum-cap is too large");
            cfg.enumeration_cap = to_u64(v);
        }
        cfg.threads = threads;

        std::ostringstream buffer;
        int code = 0;
        const auto group = [&] { return normalize(parse_group_spec(spec), cfg.factoring_budget); };
        const auto n_arg = [&] { return detail::parse_positive(n_text, "n"); };
        const auto d_arg = [&] { return detail::parse_positive(d_text, "d"); };

        if (*normalize_cmd) {
            const InvariantFactors g = group();
            if (as_json) {
                json j;
                j["group"] = detail::int_array(g.factors());
                j["order"] = to_string(order(g));
                buffer << j.dump() << '\n';
            } else {
                buffer << format_group(g) << '\n';
            }
        } else if (*construct_cmd) {
            const Realization r = construct(group(), cfg.prime_cap);
            detail::emit_realization(r, check_certificate(r, cfg.factoring_budget), as_json, cfg.factoring_budget,
                                     buffer);
        } else if (*common_cmd) {
            const Realization r = common_d_search(group(), cfg);
            detail::emit_realization(r, realizes(r.group, r.n, r.d, cfg.factoring_budget), as_json,
                                     cfg.factoring_budget, buffer);
        } else if (*minimal_cmd) {
            const Realization r = minimal_realization(group(), cfg);
            detail::emit_realization(r, realizes(r.group, r.n, r.d, cfg.factoring_budget), as_json,
                                     cfg.factoring_budget, buffer);
        } else if (*structure_cmd) {
            const auto [s, checked] = detail::checked_structure(n_arg(), d_arg(), cfg);
            detail::emit_structure(s, checked ? std::optional<bool>(true) : std::nullopt, as_json, buffer);
        } else if (*enumerate_cmd) {
            const Int n = n_arg(), d = d_arg();
            const StructureResult counted = enumerate_power_subgroup(n, d, cfg.enumeration_cap);
            const StructureResult formula =
                structure_of_power_subgroup(factorize(n, cfg.factoring_budget), d, cfg.factoring_budget);
            if (formula.invariants != counted.invariants || formula.subgroup_order != counted.subgroup_order)
                throw std::logic_error("formula and enumeration disagree for " + detail::residue_notation(n, d));
            detail::emit_structure(counted, true, as_json, buffer);
        } else if (*verify_cmd) {
            Realization r;
            r.group = group();
            r.n = n_arg();
            r.d = d_arg();
            r.method = Method::external;
            const auto [s, checked] = detail::checked_structure(r.n, r.d, cfg);
            const bool holds = s.invariants == r.group;
            if (as_json) {
                detail::emit_realization(r, holds, true, cfg.factoring_budget, buffer);
            } else {
                buffer << format_group(r.group) << " ~= " << detail::residue_notation(r.n, r.d) << ": "
                       << (holds ? "yes" : "no") << '\n';
                if (!holds)
                    buffer << detail::residue_notation(r.n, r.d) << " ~= " << format_group(s.invariants) << '\n';
            }
            code = holds ? 0 : 1;
        } else if (*survey_cmd) {
            const std::vector<SurveyRow> rows = survey(order_max, cfg);
            if (as_json)
                detail::emit_survey_json(rows, buffer);
            else
                detail::emit_survey_csv(rows, buffer);
        }

        if (out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw detail::usage_error("cannot open --out file '" + out_path + "'");
            file << buffer.str();
        }
        return code;
    } catch (const parse_error& e) {
        err << "abelian: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        err << "abelian: " << e.what() << '\n';
        return e.code() == errc::invalid_modulus ? 2 : 1;
    } catch (const detail::usage_error& e) {
        err << "abelian: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "abelian: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "abelian: internal consistency failure: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace abelian::cli
