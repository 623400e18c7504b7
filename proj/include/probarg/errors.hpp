#pragma once

#include <stdexcept>
#include <string>

namespace probarg {

/// Invalid domain input: unknown argument id, mismatched frameworks,
/// malformed probability data.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a configured resource limit (e.g. the world cap).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Constraint-text syntax error with 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Numerical breakdown in the solver (iteration cap hit, lost convergence).
/// Distinct from the Bot result: Bot is semantics, this is a fault.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace probarg
