#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyvol {

/// Invalid argument to a library operation (bad family parameter, vertex index out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested volume method does not apply to this input (non-bipartite graph for perm, ...).
class MethodNotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds the size guard of an exponential-cost method.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph DSL or edge-list parse failure; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polyvol
