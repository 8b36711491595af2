#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace coffin::exactnum {

using BigInt = boost::multiprecision::mpz_int;
// mpq_rational is kept canonical by GMP: lowest terms, positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt numerator(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt denominator(const BigRational& q) {
  return boost::multiprecision::denominator(q);
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  return BigRational(num, den);
}

/// Parses "p", "-p/q" or a finite decimal such as "0.125".
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);

int sign(const BigRational& q);
BigRational abs(const BigRational& q);

/// Exact integer power; exponent may be negative for nonzero bases.
BigRational pow(const BigRational& base, long exponent);
BigInt pow(const BigInt& base, unsigned exponent);

BigInt floor(const BigRational& q);
BigInt ceil(const BigRational& q);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

std::optional<BigInt> exact_sqrt(const BigInt& n);
std::optional<BigRational> exact_sqrt(const BigRational& q);

/// Base-10 digit count of a positive integer.
std::size_t digit_count(const BigInt& n);

/// Rounds to `digits` significant decimal digits (round-half-even) and
/// prints in plain positional notation.
std::string to_significant(const BigRational& q, int digits);

std::strong_ordering compare(const BigRational& a, const BigRational& b);

}  // namespace coffin::exactnum
