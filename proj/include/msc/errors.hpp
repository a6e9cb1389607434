#pragma once

#include <stdexcept>
#include <string>

namespace msc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ring
struct NotAUnitError : Error {
    using Error::Error;
};
struct DenominatorVanishesError : Error {
    using Error::Error;
};
struct UnboundGeneratorError : Error {
    using Error::Error;
};

// language / program loading. Line and column are 1-based; column 0 means
// "whole line" (semantic errors reported against a declaration or binding).
struct ParseError : Error {
    int line, column;
    ParseError(const std::string& msg, int line_, int column_ = 0)
        : Error(msg + " (line " + std::to_string(line_) +
                (column_ > 0 ? ", col " + std::to_string(column_) : "") + ")"),
          line(line_), column(column_) {}
};
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct DuplicateNameError : ParseError {
    using ParseError::ParseError;
};
struct UnknownNameError : ParseError {
    using ParseError::ParseError;
};
struct ArityError : ParseError {
    using ParseError::ParseError;
};
struct CyclicBindingError : ParseError {
    using ParseError::ParseError;
};
// declared invariant data disagrees with itself (count table vs class
// polynomial, hodge series vs class polynomial, bad prime power, ...)
struct DeclDataError : ParseError {
    using ParseError::ParseError;
};

// series
struct InsufficientOrderError : Error {
    using Error::Error;
};

// invariants
struct MissingCountDataError : Error {
    using Error::Error;
};

// oracle
struct TooLargeError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};

} // namespace msc
