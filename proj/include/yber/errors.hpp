#pragma once

#include <stdexcept>
#include <string>

namespace yber {

// Element or index outside 1..n (resp. 0..n-1 internally).
struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two objects of incompatible order n were combined.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition (RND, LND, involutivity, reflection equation, ...)
// does not hold for the given arguments.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation would exceed its memory or search budget. Never returns
// partial results.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input rejected; line/column are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_), column(column_) {}
};

}  // namespace yber
