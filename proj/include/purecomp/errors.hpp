#pragma once

#include <stdexcept>
#include <string>

namespace purecomp {

// Failure modes of the public operations. The CLI maps ParseError and usage
// problems to exit code 2, property violations to exit code 1.
struct UnsupportedRingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotASubmoduleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAlmostTotallyOrderedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series rewrite reached the exchange case that cannot occur when the
// annihilator sequence is almost totally ordered; reaching it means a ring
// outside the supported family slipped in.
struct CaseEUnreachableError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotVNRError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace purecomp
