#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abelian {

enum class errc {
    invalid_modulus,
    not_coprime,
    search_bound_exceeded,
    factorization_failed,
    enumeration_too_large,
    unsupported_modulus,
    infeasible_common_d,
    parse_error,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::invalid_modulus: return "InvalidModulus";
        case errc::not_coprime: return "NotCoprime";
        case errc::search_bound_exceeded: return "SearchBoundExceeded";
        case errc::factorization_failed: return "FactorizationFailed";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::unsupported_modulus: return "UnsupportedModulus";
        case errc::infeasible_common_d: return "InfeasibleCommonD";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Domain failure raised by library operations. Precondition violations
/// (caller bugs) use std::invalid_argument instead.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

class parse_error : public error {
public:
    parse_error(std::size_t position, const std::string& what)
        : error(errc::parse_error, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace abelian
