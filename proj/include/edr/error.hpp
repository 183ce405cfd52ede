#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edr {

enum class ErrorCode {
  RingMismatch,
  NotInRing,
  NonIntegralConstantTerm,
  NotDivisible,
  DivisorZero,
  NotComaximal,
  NotUnimodular,
  NotUnimodularTriple,
  PreconditionViolated,
  NotSquare,
  SearchExhausted,
  CapExceeded,
  TransformFailed,
  ParseError,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in element or matrix text; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              "parse error at " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace edr
