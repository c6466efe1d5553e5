#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

/// Every failure the library reports carries one of these codes; the CLI maps
/// them one-to-one onto JSON error codes.
enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  DegreeMismatch,
  ArityMismatch,
  InexactField,
  NotInSpan,
  NotSubCI,
  InsufficientDegreeBound,
  RootNotInField,
  DegeneratePoint,
  DependentLinearForms,
  NotSquareFree,
  ZeroLambda,
  UnsupportedK,
  DuplicatePoint,
  InvalidArgument,
  SyntaxError,
  NonHomogeneous,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NonHomogeneous : public Error {
 public:
  NonHomogeneous(int first, int second)
      : Error(ErrorCode::NonHomogeneous, "non-homogeneous input: terms of degree " +
                                             std::to_string(first) + " and " +
                                             std::to_string(second)),
        first_(first),
        second_(second) {}
  int first_degree() const noexcept { return first_; }
  int second_degree() const noexcept { return second_; }

 private:
  int first_, second_;
};

}  // namespace waring
