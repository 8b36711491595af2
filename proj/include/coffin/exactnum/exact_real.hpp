#pragma once

#include <compare>
#include <concepts>
#include <memory>
#include <optional>
#include <string>

#include "coffin/exactnum/rational.hpp"

namespace coffin::exactnum {

/// Closed rational bracket [lo, hi].
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& q) const { return lo <= q && q <= hi; }
  bool excludes_zero() const { return lo.sign() > 0 || hi.sign() < 0; }
};

namespace detail {
struct Node;
}

/// A constructible real number: an expression DAG over big rationals closed
/// under + - * / and sqrt.
///
/// Values are immutable. Each node carries a cached rational interval that
/// is only ever narrowed. Comparisons try the intervals first and fall back
/// to an exact normalization in a tower of quadratic extensions, so equal
/// values always compare Equal in finite time.
///
/// Construction enforces the domain: dividing by a value that is exactly
/// zero, or taking the square root of a negative value, throws DomainError.
class ExactReal {
 public:
  enum class Op { Leaf, Neg, Add, Sub, Mul, Div, Sqrt };

  ExactReal();
  ExactReal(BigRational value);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExactReal(T value) : ExactReal(BigRational(static_cast<long long>(value))) {}  // NOLINT

  static ExactReal sqrt(const ExactReal& operand);

  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
  ExactReal operator-() const;

  ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
  ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }
  ExactReal& operator*=(const ExactReal& o) { return *this = *this * o; }
  ExactReal& operator/=(const ExactReal& o) { return *this = *this / o; }

  Op op() const;
  /// The value if this is a rational leaf. Non-leaf values may still be
  /// rational; use QuadraticTower to find out.
  const BigRational* as_rational() const;
  bool is_rational_leaf() const { return as_rational() != nullptr; }

  /// Children of an operator node (rhs is empty for Neg and Sqrt).
  ExactReal lhs() const;
  ExactReal rhs() const;

  /// Current cached bracket; never wider than any earlier one.
  RationalInterval interval() const;
  /// Narrows the cached bracket until its width is at most `width`. The
  /// target halves from 1 per step; more than 4096 halvings is refused.
  RationalInterval refine(const BigRational& width) const;

  /// -1, 0 or 1, decided exactly.
  int sign() const;

  double approx() const;
  /// Decimal rendering of a refined midpoint.
  std::string decimal(int significant_digits = 15) const;
  /// Expression text, e.g. "(-1 + sqrt(5))/2".
  std::string expression() const;

  /// Node identity, stable for the lifetime of the value.
  const void* identity() const { return node_.get(); }

  /// Dyadic interval evaluation at `precision` bits, or nullopt when a
  /// divisor's bracket still straddles zero. Results are cached per node.
  std::optional<RationalInterval> evaluate(unsigned precision) const;

 private:
  explicit ExactReal(std::shared_ptr<const detail::Node> node);
  static ExactReal make(Op op, const ExactReal& a, const ExactReal& b);

  std::shared_ptr<const detail::Node> node_;
};

std::strong_ordering compare(const ExactReal& x, const ExactReal& y);

inline bool operator==(const ExactReal& x, const ExactReal& y) {
  return compare(x, y) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y) {
  return compare(x, y);
}

ExactReal abs(const ExactReal& x);
ExactReal square(const ExactReal& x);

}  // namespace coffin::exactnum
