#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coffin/exactnum/exact_real.hpp"
#include "coffin/exactnum/rational.hpp"

namespace coffin::exactnum {

/// A tower Q = K0 ⊂ K1 ⊂ ... ⊂ Kn with K(i+1) = Ki(√ri), where each radicand
/// ri is a positive element of Ki that is not a square in Ki. Every extension
/// therefore has degree 2, and an element is zero iff all its rational
/// coordinates are zero.
///
/// An element of level k is a vector of 2^k rationals; bit t of an index
/// selects the factor √rt. Lower-level vectors embed by zero padding.
/// The tower grows as square roots of non-squares are taken.
class QuadraticTower {
 public:
  using Element = std::vector<BigRational>;

  std::size_t depth() const { return radicands_.size(); }
  const Element& radicand(std::size_t i) const { return radicands_.at(i); }

  static Element constant(const BigRational& q) { return Element{q}; }
  static std::size_t level(const Element& x);
  static bool is_zero(const Element& x);
  static bool is_rational(const Element& x) { return level(trimmed(x)) == 0; }
  static Element trimmed(Element x);

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  /// Throws DomainError for zero.
  Element inverse(const Element& x) const;
  Element div(const Element& x, const Element& y) const { return mul(x, inverse(y)); }

  int sign(const Element& x) const;

  /// Some y in the current top field with y² = x, if one exists.
  std::optional<Element> square_root_in_field(const Element& x) const;

  /// Nonnegative square root, adjoining √x when x is not already a square.
  /// Throws DomainError for negative x.
  Element sqrt(const Element& x);

  /// Normalizes an expression into this tower, memoized over the DAG.
  Element normalize(const ExactReal& value);

 private:
  Element mul_at(const Element& x, const Element& y, std::size_t lvl) const;
  Element inverse_at(const Element& x, std::size_t lvl) const;
  int sign_at(const Element& x, std::size_t lvl) const;
  std::optional<Element> sqrt_at(const Element& x, std::size_t lvl) const;

  std::vector<Element> radicands_;
  // Holding the value keeps the node alive, so addresses are never reused.
  std::unordered_map<const void*, std::pair<ExactReal, Element>> memo_;
};

}  // namespace coffin::exactnum
