#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "coffin/exactnum/exact_real.hpp"
#include "coffin/exactnum/rational.hpp"

namespace coffin::exactnum {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero, in
/// which case the coefficient list is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(BigInt coefficient, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  BigRational operator()(const BigRational& x) const;
  ExactReal operator()(const ExactReal& x) const;
  double operator()(double x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// All rational roots, in increasing order. Candidates are ±(divisor of the
/// trailing nonzero coefficient)/(divisor of the leading coefficient), each
/// confirmed by exact evaluation; zero is a root iff the constant term is 0.
std::vector<BigRational> rational_roots(const IntPolynomial& p);

/// Σ|c_i|·r^i, an upper bound for |p(t)| on [-r, r]. Requires p(0) = 0 and
/// r > 0.
BigRational coeff_bound(const IntPolynomial& p, const BigRational& r);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

}  // namespace coffin::exactnum
