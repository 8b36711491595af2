#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coffin/exactnum/rational.hpp"

namespace coffin::exactnum {

/// a + bω in Z[ω]/(ω² + ω + 1).
struct ZOmega {
  BigInt a;
  BigInt b;

  static ZOmega omega_power(int k);

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_integer() const { return b == 0; }
  /// Complex conjugation, ω ↦ ω².
  ZOmega conjugate() const;

  friend ZOmega operator+(const ZOmega& x, const ZOmega& y) { return {x.a + y.a, x.b + y.b}; }
  friend ZOmega operator-(const ZOmega& x, const ZOmega& y) { return {x.a - y.a, x.b - y.b}; }
  friend ZOmega operator*(const ZOmega& x, const ZOmega& y);
  friend bool operator==(const ZOmega& x, const ZOmega& y) { return x.a == y.a && x.b == y.b; }

  std::string to_string() const;
};

/// Exponent vector over (x, y, z).
using Monomial = std::array<std::uint32_t, 3>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order with x > y > z; `true` when lhs precedes rhs
/// in descending output order.
struct GrlexDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse polynomial in x, y, z over Z[ω]. Zero coefficients are never
/// stored, and coefficients stay reduced modulo ω² + ω + 1.
class MultiPolynomial {
 public:
  using Terms = std::map<Monomial, ZOmega, GrlexDescending>;

  MultiPolynomial() = default;
  static MultiPolynomial constant(const ZOmega& c);
  static MultiPolynomial variable(int index);
  static MultiPolynomial x() { return variable(0); }
  static MultiPolynomial y() { return variable(1); }
  static MultiPolynomial z() { return variable(2); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ZOmega coefficient(const Monomial& m) const;
  /// True when every coefficient lies in Z (no ω part).
  bool has_integer_coefficients() const;

  void add_term(const Monomial& m, const ZOmega& c);

  friend MultiPolynomial operator+(const MultiPolynomial& p, const MultiPolynomial& q);
  friend MultiPolynomial operator-(const MultiPolynomial& p, const MultiPolynomial& q);
  friend MultiPolynomial operator*(const MultiPolynomial& p, const MultiPolynomial& q);
  friend MultiPolynomial operator*(const ZOmega& c, const MultiPolynomial& p);
  friend bool operator==(const MultiPolynomial& p, const MultiPolynomial& q) { return p.terms_ == q.terms_; }

  MultiPolynomial pow(unsigned k) const;

  /// Substitutes polynomials for x, y, z.
  MultiPolynomial compose(const std::array<MultiPolynomial, 3>& images) const;

  /// Evaluation at integer points (only valid when no ω appears or the
  /// caller wants the Z[ω] value).
  ZOmega evaluate(const std::array<BigInt, 3>& point) const;

  std::string to_string(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

 private:
  Terms terms_;
};

/// Exact expanded product with ω-reduction. Requires at least one factor.
MultiPolynomial expand_product(const std::vector<MultiPolynomial>& factors);

}  // namespace coffin::exactnum
