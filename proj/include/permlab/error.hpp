#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Base for every error the library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad field spec, mixed-field arithmetic, division by zero.
struct FieldError : Error {
    using Error::Error;
};

// Ring mismatch, too many variables, exponent overflow.
struct RingError : Error {
    using Error::Error;
};

// Text that does not match the scalar / polynomial / file grammar.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A resource cap was hit (basis size, degree, node budget).
struct BudgetError : Error {
    using Error::Error;
};

// Invalid arguments to an operation (shape, range, precondition).
struct ArgError : Error {
    using Error::Error;
};

// File / JSON problems.
struct IoError : Error {
    using Error::Error;
};

} // namespace permlab
