#pragma once

#include <compare>

#include "coffin/exactnum/rational.hpp"

namespace coffin::exactnum {

/// Outcome of comparing log_b(a) with p/q. Since t ↦ b^t and t ↦ t^q are
/// increasing, log_b(a) ? p/q has the same answer as a^q ? b^p, which is
/// decided on exact integers. `lhs` = a^q and `rhs` = b^p are the witnesses.
struct LogComparison {
  std::strong_ordering ordering = std::strong_ordering::equal;
  BigInt lhs;
  BigInt rhs;
};

/// Requires a > 1, b > 1, q > 0.
LogComparison compare_log(const BigInt& a, const BigInt& b, long p, long q);

}  // namespace coffin::exactnum
