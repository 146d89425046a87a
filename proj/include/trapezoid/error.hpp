#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trapezoid {

/// Input text contains a symbol outside {a, b} or is too long.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position, char offending)
      : std::invalid_argument(what), position_(position), offending_(offending) {}

  std::size_t position() const noexcept { return position_; }
  char offending() const noexcept { return offending_; }

 private:
  std::size_t position_;
  char offending_;
};

/// An operation was called outside its domain (e.g. central_root of a
/// balanced word).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural check on a computed result failed. Never expected on valid
/// input; signals a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trapezoid
