#ifndef DCOV_ERROR_HPP
#define DCOV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dcov {

// Error codes shared between the C++ core, the C API and the CLI exit codes.
// Numeric values are part of the external contract; do not reorder.
enum class ErrorCode : int {
    ok = 0,
    check_failed = 1,
    parse_error = 2,
    not_in_ideal_square = 3,
    degenerate_decomposition = 4,
    zero_branch = 5,
    component_divisor = 6,
    cap_exceeded = 7,
    retry_exceeded = 8,
    bad_prime = 9,
    ring_mismatch = 10,
    degree_mismatch = 11,
    dimension_mismatch = 12,
    bad_argument = 13,
    unknown_name = 14,
    internal = 15,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace dcov

#endif
