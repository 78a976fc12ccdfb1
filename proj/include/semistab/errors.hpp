#pragma once

#include <stdexcept>
#include <string>

namespace semistab {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (problem files, polynomial syntax).
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int column)
        : error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}

    int line;
    int column;
};

/// Semantically invalid input: non-homogeneous entries, rings that are
/// not curves, singular curves, zero maps.
class validation_error : public error {
public:
    using error::error;
};

/// Raised when a computation exceeds a configured resource cap
/// (currently the nonzero budget of the sparse elimination).
class resource_error : public error {
public:
    using error::error;
};

} // namespace semistab
