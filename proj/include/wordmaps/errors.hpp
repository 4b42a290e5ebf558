#pragma once

#include <stdexcept>
#include <string>

namespace wordmaps {

/// Malformed user input: word syntax, group specs, documents, records.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Arguments that violate an operation's precondition (rank mismatch, kinds).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A table that fails the group axioms.
class GroupAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tuple-space budget or order/automorphism cap exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wordmaps
