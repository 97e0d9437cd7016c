#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genus {

// Violated operation precondition: mismatched ambients, hypothesis
// violations, empty or zero quotient rings, and the like.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Syntax error in a polynomial expression or generator file.
// Positions are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column "
                             + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Every projection attempt produced a non-principal or wrong-dimension
// image; the log records what each attempt found.
struct ProjectionError : std::runtime_error {
    std::vector<std::string> attempt_log;
    ProjectionError(const std::string& msg, std::vector<std::string> log)
        : std::runtime_error(msg), attempt_log(std::move(log)) {}
};

} // namespace genus
