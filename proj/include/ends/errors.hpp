#ifndef ENDS_ERRORS_HPP
#define ENDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ends {

/// Base class of every error the library throws. The CLI maps subclasses
/// onto exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation text, unknown generator, duplicate name, ...
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A word-problem strategy was requested that the presentation cannot support
/// (Dehn's algorithm on a presentation that is not C'(1/6)).
class StrategyError : public Error {
 public:
  using Error::Error;
};

/// The bounded word-problem solver could not decide within its radius cap.
class UndecidedError : public Error {
 public:
  using Error::Error;
};

/// A word or vertex left the enumerated ball.
class OutsideBallError : public Error {
 public:
  using Error::Error;
};

/// A distance could not be certified from the data inside the ball.
class UncertifiedError : public Error {
 public:
  using Error::Error;
};

/// Coset enumeration exceeded its configured table budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ends

#endif  // ENDS_ERRORS_HPP
