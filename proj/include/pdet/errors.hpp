#ifndef PDET_ERRORS_HPP
#define PDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdet {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments, malformed files, violated preconditions. The CLI maps
// these to exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Solver failures, non-convergence, breached internal bounds.
struct MathError : Error {
    explicit MathError(const std::string& msg) : Error(msg) {}
};

} // namespace pdet

#endif
