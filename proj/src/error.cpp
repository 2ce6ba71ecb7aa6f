#include "dcov/error.hpp"

namespace dcov {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ok: return "ok";
        case ErrorCode::check_failed: return "check-failed";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::not_in_ideal_square: return "not-in-ideal-square";
        case ErrorCode::degenerate_decomposition: return "degenerate-decomposition";
        case ErrorCode::zero_branch: return "zero-branch";
        case ErrorCode::component_divisor: return "component-divisor";
        case ErrorCode::cap_exceeded: return "cap-exceeded";
        case ErrorCode::retry_exceeded: return "retry-exceeded";
        case ErrorCode::bad_prime: return "bad-prime";
        case ErrorCode::ring_mismatch: return "ring-mismatch";
        case ErrorCode::degree_mismatch: return "degree-mismatch";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::bad_argument: return "bad-argument";
        case ErrorCode::unknown_name: return "unknown-name";
        case ErrorCode::internal: return "internal-error";
    }
    return "unknown";
}

} // namespace dcov
