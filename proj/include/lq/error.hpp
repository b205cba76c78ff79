#pragma once

#include <stdexcept>
#include <string>

namespace lq {

// Root of every error the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller handed in data that violates a documented precondition.
struct InvalidInput : Error {
    using Error::Error;
};

// A post-condition check failed; indicates a bug rather than bad input.
struct InternalError : Error {
    using Error::Error;
};

struct NotLocallyIndependent : Error {
    using Error::Error;
};

struct NotASubrepresentation : Error {
    using Error::Error;
};

// Randomised construction did not succeed within its retry allowance.
struct RealizationFailed : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace lq
