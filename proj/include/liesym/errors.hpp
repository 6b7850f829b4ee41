#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

struct RankMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotLieElementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression / polynomial syntax errors carry a 1-based position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

}  // namespace liesym
