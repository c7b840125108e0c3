#ifndef HUMBERT_ERROR_HPP
#define HUMBERT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace humbert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's precondition (wrong degree, non-square matrix, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A computation hit a geometric degeneracy: an interpolation determinant or an
/// elimination level vanished identically.
class DegenerateError : public Error {
public:
  DegenerateError(std::string what, std::ptrdiff_t level = -1)
      : Error(std::move(what)), level_(level) {}

  /// Elimination level that vanished, or -1 when not applicable.
  std::ptrdiff_t level() const noexcept { return level_; }

private:
  std::ptrdiff_t level_;
};

/// A run would exceed the configured memory/size budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace humbert

#endif // HUMBERT_ERROR_HPP
