#pragma once

#include <stdexcept>
#include <string>

namespace valtop {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Text could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Operands belong to different groups, rings or carriers.
class MismatchError : public Error {
 public:
  explicit MismatchError(const std::string& what) : Error(what) {}
};

/// A documented operation precondition was violated.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace valtop
