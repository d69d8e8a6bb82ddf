#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptc {

/// Inversion could not witness a nonzero value: the doubling search hit its
/// cap with |f(k)| <= 1 throughout.  The input may be zero or merely too
/// small for the cap; this is a normal error value, not a crash.
struct PossiblyZeroError : std::runtime_error {
    explicit PossiblyZeroError(const std::string& what) : std::runtime_error(what) {}
};

/// Root certification retry ladder exhausted (near-multiple roots, or discs
/// that will not separate at the attempted precisions).
struct PrecisionExhaustedError : std::runtime_error {
    explicit PrecisionExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

/// A partial-oracle sequence failed validation or its enumeration never
/// reached the required threshold within the search cap.
struct MalformedSequenceError : std::invalid_argument {
    explicit MalformedSequenceError(const std::string& what) : std::invalid_argument(what) {}
};

/// Expression syntax error; offset is the byte position in the input.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t at, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

} // namespace ptc
