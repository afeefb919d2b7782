#pragma once

#include <stdexcept>
#include <string>

namespace mindist {

enum class ErrorKind {
  Parse,
  InvalidDimensions,
  RankDeficient,
  InvalidArity,
  Overflow,
  OutOfRange,
  BudgetExceeded,
  TooLarge,
  NotADivisor,
  NotAUnit,
  LengthMismatch,
  Interrupted,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mindist
