#pragma once

#include <cstdint>
#include <string>

namespace mindist {

/// Unsigned 128-bit count used for binomials, ranks and cost counters.
using BigCount = unsigned __int128;

inline constexpr BigCount kBigCountMax = ~BigCount{0};

/// Checked arithmetic; throws Error{Overflow} on wraparound.
BigCount checked_add(BigCount a, BigCount b);
BigCount checked_mul(BigCount a, BigCount b);

std::string to_string(BigCount value);

/// Parses a decimal string; throws Error{Parse} on bad input or overflow.
BigCount parse_big_count(const std::string& text);

}  // namespace mindist
