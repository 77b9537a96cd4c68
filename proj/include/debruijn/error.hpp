#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace debruijn {

enum class ErrorCode {
  BadState,
  BadSequence,
  WindowTooLong,
  ArityMismatch,
  SyntaxError,
  BadLength,
  BadOrder,
  OrderTooLarge,
  NotPrimitive,
  DegreeTooLarge,
  DegreeOutOfRange,
  BadPolynomial,
  BadT,
  BadInitialState,
  BadParams,
  NotDeBruijnSeed,
  NotDeBruijn,
  NonTerminating,
};

const char* to_string(ErrorCode code);

/// Domain error raised by every module. `code()` names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// ANF parse failure; `position()` is the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace debruijn
