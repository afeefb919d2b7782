#include "mindist/big_count.hpp"
#include "mindist/errors.hpp"

namespace mindist {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidDimensions: return "invalid dimensions";
    case ErrorKind::RankDeficient: return "rank deficient";
    case ErrorKind::InvalidArity: return "invalid arity";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::BudgetExceeded: return "memory budget exceeded";
    case ErrorKind::TooLarge: return "too large";
    case ErrorKind::NotADivisor: return "not a divisor";
    case ErrorKind::NotAUnit: return "not a unit";
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::Interrupted: return "interrupted";
  }
  return "unknown error";
}

BigCount checked_add(BigCount a, BigCount b) {
  BigCount out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "128-bit count overflow in addition");
  }
  return out;
}

BigCount checked_mul(BigCount a, BigCount b) {
  BigCount out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "128-bit count overflow in multiplication");
  }
  return out;
}

std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

BigCount parse_big_count(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty number");
  BigCount value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorKind::Parse, "not a decimal number: '" + text + "'");
    }
    try {
      value = checked_add(checked_mul(value, 10), static_cast<unsigned>(ch - '0'));
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "number too large: '" + text + "'");
    }
  }
  return value;
}

}  // namespace mindist
