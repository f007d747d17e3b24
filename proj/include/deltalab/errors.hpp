#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltalab {

// Raised when an operation needs more bits of a finite prefix than it was given.
struct insufficient_prefix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an evidence window is too short for the requested check.
struct insufficient_window_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a corecursive equation system stops making progress.
struct productivity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a check that can only fail through a bug or an invalid
// certificate fails; never a normal input condition.
struct contradiction_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Syntax error with source position (1-based line and column).
struct parse_error : std::runtime_error {
    std::size_t line;
    std::size_t col;

    parse_error(const std::string& msg, std::size_t line_, std::size_t col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

}  // namespace deltalab
