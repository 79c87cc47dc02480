#pragma once

#include <stdexcept>
#include <string>

namespace symns {

/// Invalid argument or violated precondition (bad grid, negative density, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Failure classes of a time integration. Each maps to one termination reason.
enum class FailureKind { dt_underflow, solver_failure, nan_detected };

class SolverError : public std::runtime_error {
 public:
  SolverError(FailureKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  FailureKind kind() const noexcept { return kind_; }

 private:
  FailureKind kind_;
};

/// Configuration text could not be parsed or validated. `line` is 1-based, 0 if
/// the error is not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace symns
