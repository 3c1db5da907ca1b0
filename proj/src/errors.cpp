#include "liesdit/errors.hpp"

namespace liesdit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::shape_mismatch: return "shape_mismatch";
        case ErrorCode::ambient_mismatch: return "ambient_mismatch";
        case ErrorCode::not_square: return "not_square";
        case ErrorCode::not_closed: return "not_closed";
        case ErrorCode::not_subalgebra: return "not_subalgebra";
        case ErrorCode::not_semisimple: return "not_semisimple";
        case ErrorCode::not_commuting: return "not_commuting";
        case ErrorCode::unsupported_spectrum: return "unsupported_spectrum";
        case ErrorCode::not_alternating: return "not_alternating";
        case ErrorCode::chain_not_invariant: return "chain_not_invariant";
        case ErrorCode::guard_exceeded: return "guard_exceeded";
        case ErrorCode::descent_stalled: return "descent_stalled";
        case ErrorCode::invalid_certificate: return "invalid_certificate";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::parse_error: return "parse_error";
    }
    return "unknown";
}

}  // namespace liesdit
