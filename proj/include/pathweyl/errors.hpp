#pragma once

#include <stdexcept>
#include <string>

namespace pathweyl {

/// Malformed text input (graph files, element syntax, multiset lists).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested computation is larger than the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computation routes disagreed. Always a defect.
class OracleMismatch : public std::logic_error {
 public:
  explicit OracleMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pathweyl
