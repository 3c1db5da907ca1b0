#pragma once

#include <stdexcept>
#include <string>

namespace liesdit {

/// Machine-readable failure categories, surfaced verbatim by the CLI.
enum class ErrorCode {
    shape_mismatch,
    ambient_mismatch,
    not_square,
    not_closed,
    not_subalgebra,
    not_semisimple,
    not_commuting,
    unsupported_spectrum,
    not_alternating,
    chain_not_invariant,
    guard_exceeded,
    descent_stalled,
    invalid_certificate,
    invalid_argument,
    parse_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace liesdit
