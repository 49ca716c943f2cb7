#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flextile {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed pot text; `position` is the 0-based byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A pot that parses but is not well formed (duplicates, complement closure...).
class PotError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Scaling a spectrum point produced a fractional tile count.
class NonIntegralError : public PreconditionError {
 public:
  NonIntegralError(std::size_t component, const std::string& what)
      : PreconditionError(what), component_(component) {}

  /// 0-based tile index of the first fractional component.
  std::size_t component() const noexcept { return component_; }

 private:
  std::size_t component_;
};

/// The requested order admits no tile distribution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its fixed enumeration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace flextile
