#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ck {

// Error taxonomy; the CLI maps these to process exit codes.
//   UsageError        -> 2   (bad arguments, malformed formulas, precondition violations)
//   ResourceError     -> 3   (a work-budget guard refused the computation)
//   InconsistencyError-> 4   (an internal cross-check failed; indicates a bug, not bad input)
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InconsistencyError : std::runtime_error {
  explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failures carry a 1-based position into the source text.
struct ParseError : UsageError {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : UsageError(msg + " at line " + std::to_string(line_) + ", column " +
                   std::to_string(col_)),
        line(line_),
        col(col_) {}
};

}  // namespace ck
