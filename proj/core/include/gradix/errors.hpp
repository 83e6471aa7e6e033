#ifndef GRADIX_ERRORS_HPP
#define GRADIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gradix {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller misused the API or supplied malformed input (CLI exit code 2).
struct usage_error : error {
    using error::error;
};

// Malformed text input; `position` is 1-based within the offending string.
struct parse_error : usage_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : usage_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// A documented operation precondition does not hold (CLI exit code 3).
struct precondition_error : error {
    using error::error;
};

// Zero-dimensionality was required but the input ideal is positive-dimensional.
struct dimension_error : precondition_error {
    using precondition_error::precondition_error;
};

// Inversion of zero in a field.
struct division_by_zero : precondition_error {
    using precondition_error::precondition_error;
};

}  // namespace gradix

#endif
