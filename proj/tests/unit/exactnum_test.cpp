#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "coffin/exactnum/exact_real.hpp"
#include "coffin/exactnum/int_polynomial.hpp"
#include "coffin/exactnum/multi_polynomial.hpp"
#include "coffin/exactnum/power_comparison.hpp"
#include "coffin/exactnum/quadratic_tower.hpp"

namespace coffin::exactnum {
namespace {

using Dec200 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;
using Dec100 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>>;

ExactReal sqrt_of(long long n) { return ExactReal::sqrt(ExactReal(n)); }
ExactReal frac(long long p, long long q) { return ExactReal(BigRational(p, q)); }

// ---- rational helpers -------------------------------------------------------

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/5"), BigRational(3, 5));
  EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(parse_rational("1.024"), BigRational(128, 125));
  EXPECT_EQ(parse_rational("17"), BigRational(17));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, SignificantDigitsRoundHalfEven) {
  EXPECT_EQ(to_significant(BigRational(1, 3), 12), "0.333333333333");
  EXPECT_EQ(to_significant(BigRational(2, 3), 3), "0.667");
  EXPECT_EQ(to_significant(BigRational(125, 1000), 2), "0.12");  // tie -> even
  EXPECT_EQ(to_significant(BigRational(135, 1000), 2), "0.14");
  EXPECT_EQ(to_significant(BigRational(9999, 1), 2), "10000");
  EXPECT_EQ(to_significant(BigRational(-5, 2), 12), "-2.5");
  EXPECT_EQ(to_significant(BigRational(0), 12), "0");
}

// ---- digit_count -------------------------------------------------------------

std::size_t digits_by_division(BigInt n) {
  std::size_t count = 0;
  while (n > 0) {
    n /= 10;
    ++count;
  }
  return count;
}

TEST(DigitCount, KnownAndOracleValues) {
  EXPECT_EQ(digit_count(pow(BigInt(125), 100)), 210u);
  EXPECT_EQ(digit_count(BigInt(1000)), 4u);
  BigInt two300 = pow(BigInt(2), 300);
  EXPECT_EQ(digits_by_division(two300), 91u);
  EXPECT_EQ(digit_count(two300), 91u);
  EXPECT_THROW(digit_count(BigInt(0)), DomainError);
  EXPECT_THROW(digit_count(BigInt(-7)), DomainError);
}

// ---- compare -----------------------------------------------------------------

TEST(Compare, NestedRadicalIdentity) {
  ExactReal lhs = sqrt_of(2) + sqrt_of(3);
  ExactReal rhs = ExactReal::sqrt(ExactReal(5) + ExactReal(2) * sqrt_of(6));
  EXPECT_EQ(compare(lhs, rhs), std::strong_ordering::equal);
}

TEST(Compare, IdenticalRationals) {
  EXPECT_EQ(compare(frac(3, 5), frac(3, 5)), std::strong_ordering::equal);
}

// Digits of sqrt(2) by integer bisection, independent of isqrt.
BigInt sqrt2_scaled(unsigned decimals) {
  BigInt target = 2 * pow(BigInt(10), 2 * decimals);
  BigInt lo = 0, hi = target;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    (mid * mid <= target ? lo : hi) = mid;
  }
  return lo;
}

TEST(Compare, SqrtTwoAgainstTruncatedDecimal) {
  BigInt digits = sqrt2_scaled(8);
  ASSERT_EQ(digits, BigInt(141421356));
  ExactReal truncated(BigRational(digits, pow(BigInt(10), 8)));
  EXPECT_EQ(compare(sqrt_of(2), truncated), std::strong_ordering::greater);
  ExactReal rounded_up(BigRational(digits + 1, pow(BigInt(10), 8)));
  EXPECT_EQ(compare(sqrt_of(2), rounded_up), std::strong_ordering::less);
}

TEST(Compare, DenestingInAnyOrder) {
  // Adjoin the nested radical first, then √2: √2 must be recognized inside.
  ExactReal nested = ExactReal::sqrt(ExactReal(5) + ExactReal(2) * sqrt_of(6));
  ExactReal difference = nested - sqrt_of(3);
  EXPECT_EQ(compare(difference, sqrt_of(2)), std::strong_ordering::equal);
}

TEST(Compare, TinyNonzeroDifferenceNeedsSymbolicPath) {
  // (√2 + √3)^8 is within 1e-7 of an integer, far below the fast path's reach
  // only after scaling; the exact route must still say "not equal".
  ExactReal s = sqrt_of(2) + sqrt_of(3);
  ExactReal p = s * s * s * s * s * s * s * s;
  ExactReal conjugate = sqrt_of(3) - sqrt_of(2);
  ExactReal q = conjugate * conjugate * conjugate * conjugate * conjugate * conjugate * conjugate * conjugate;
  EXPECT_EQ(compare(p + q, ExactReal(9602)), std::strong_ordering::equal);
  EXPECT_EQ(compare(p, ExactReal(9602)), std::strong_ordering::less);
}

TEST(ExactRealDomain, RejectsNegativeSqrtAndZeroDivision) {
  EXPECT_THROW(ExactReal::sqrt(ExactReal(-1)), DomainError);
  EXPECT_THROW(ExactReal::sqrt(sqrt_of(2) - sqrt_of(3)), DomainError);
  EXPECT_THROW(ExactReal(1) / (sqrt_of(8) - ExactReal(2) * sqrt_of(2)), DomainError);
  EXPECT_EQ(ExactReal::sqrt(sqrt_of(8) - ExactReal(2) * sqrt_of(2)).sign(), 0);
}

TEST(ExactRealInterval, RefinementIsMonotoneAndBracketsValue) {
  ExactReal x = (ExactReal(-1) + sqrt_of(5)) / ExactReal(2);
  RationalInterval first = x.refine(BigRational(1, 1000));
  RationalInterval second = x.refine(BigRational(1, BigInt(1) << 80));
  EXPECT_LE(second.width(), BigRational(1, BigInt(1) << 80));
  EXPECT_GE(second.lo, first.lo);
  EXPECT_LE(second.hi, first.hi);
  EXPECT_EQ(x.decimal(12), "0.61803398875");
  EXPECT_THROW(x.refine(BigRational(0)), DomainError);
}

TEST(ExactRealInterval, RefusesMoreThan4096Halvings) {
  ExactReal x = sqrt_of(2);
  BigRational too_fine(1, BigInt(1) << 4100);
  EXPECT_THROW(x.refine(too_fine), InternalError);
}

// ---- property tests: field laws and interval soundness ---------------------

struct Sample {
  ExactReal exact;
  Dec200 oracle;
};

class RandomConstructible {
 public:
  explicit RandomConstructible(std::uint64_t seed) : rng_(seed) {}

  Sample leaf() {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    int p = num(rng_), q = den(rng_);
    return {ExactReal(BigRational(p, q)), Dec200(p) / q};
  }

  Sample radical() {
    std::uniform_int_distribution<int> num(1, 30), den(1, 7);
    int p = num(rng_), q = den(rng_);
    return {ExactReal::sqrt(ExactReal(BigRational(p, q))), boost::multiprecision::sqrt(Dec200(p) / q)};
  }

  Sample any(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(rng_)) {
      case 0:
        return leaf();
      case 1:
        return radical();
      case 2: {
        auto a = any(depth - 1), b = any(depth - 1);
        return {a.exact + b.exact, a.oracle + b.oracle};
      }
      case 3: {
        auto a = any(depth - 1), b = any(depth - 1);
        return {a.exact - b.exact, a.oracle - b.oracle};
      }
      case 4: {
        auto a = any(depth - 1), b = any(depth - 1);
        return {a.exact * b.exact, a.oracle * b.oracle};
      }
      default: {
        auto a = any(depth - 1);
        return {ExactReal::sqrt(abs(a.exact)), boost::multiprecision::sqrt(boost::multiprecision::abs(a.oracle))};
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

TEST(ExactRealProperty, FieldLaws) {
  RandomConstructible gen(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    ExactReal a = gen.any(2).exact, b = gen.any(2).exact, c = gen.any(2).exact;
    EXPECT_EQ(compare(a + b, b + a), std::strong_ordering::equal);
    EXPECT_EQ(compare(a * (b + c), a * b + a * c), std::strong_ordering::equal);
    ExactReal nonneg = abs(a);
    ExactReal root = ExactReal::sqrt(nonneg);
    EXPECT_EQ(compare(root * root, nonneg), std::strong_ordering::equal);
  }
}

Dec200 to_dec(const BigRational& q) {
  return Dec200(numerator(q).str()) / Dec200(denominator(q).str());
}

TEST(ExactRealProperty, IntervalContainsHighPrecisionValue) {
  RandomConstructible gen(7);
  const Dec200 slack("1e-150");
  for (int trial = 0; trial < 40; ++trial) {
    Sample s = gen.any(3);
    for (unsigned bits : {4u, 40u, 200u}) {
      RationalInterval iv = s.exact.refine(BigRational(1, BigInt(1) << bits));
      EXPECT_LE(to_dec(iv.lo), s.oracle + slack) << s.exact.expression();
      EXPECT_GE(to_dec(iv.hi), s.oracle - slack) << s.exact.expression();
    }
  }
}

// ---- quadratic tower -------------------------------------------------------

TEST(QuadraticTower, AdjoinsOnlyNonSquares) {
  QuadraticTower t;
  auto r2 = t.sqrt(QuadraticTower::constant(2));
  auto r8 = t.sqrt(QuadraticTower::constant(8));
  EXPECT_EQ(t.depth(), 1u);
  EXPECT_TRUE(QuadraticTower::is_zero(t.sub(r8, t.mul(QuadraticTower::constant(2), r2))));
  t.sqrt(QuadraticTower::constant(3));
  EXPECT_EQ(t.depth(), 2u);
  t.sqrt(QuadraticTower::constant(6));  // √6 = √2·√3 already present
  EXPECT_EQ(t.depth(), 2u);
}

TEST(QuadraticTower, SignOfMixedTerms) {
  QuadraticTower t;
  auto r2 = t.sqrt(QuadraticTower::constant(2));
  // 1.414 - 1.5 < 0 and 1.5 - 1.414 > 0
  auto e = t.sub(r2, QuadraticTower::constant(BigRational(3, 2)));
  EXPECT_EQ(t.sign(e), -1);
  EXPECT_EQ(t.sign(t.neg(e)), 1);
  EXPECT_THROW(t.sqrt(e), DomainError);
  EXPECT_THROW(t.inverse(QuadraticTower::constant(0)), DomainError);
}

// ---- polynomials -------------------------------------------------------------

TEST(RationalRoots, CubicExamples) {
  EXPECT_TRUE(rational_roots(IntPolynomial{1, -3, 0, 1}).empty());  // x^3 - 3x + 1
  EXPECT_EQ(rational_roots(IntPolynomial{1, -2, 0, 1}), std::vector<BigRational>{BigRational(1)});
  EXPECT_EQ(rational_roots(IntPolynomial{-4, 0, 1}), (std::vector<BigRational>{BigRational(-2), BigRational(2)}));
  EXPECT_EQ(rational_roots(IntPolynomial{0, 0, 3, -1}), (std::vector<BigRational>{BigRational(0), BigRational(3)}));
  EXPECT_THROW(rational_roots(IntPolynomial{}), DomainError);
}

// Brute force over every fraction inside the Cauchy bound.
std::vector<BigRational> brute_force_roots(const IntPolynomial& p) {
  BigInt lead = p.leading() < 0 ? BigInt(-p.leading()) : p.leading();
  BigInt max_coeff = 0;
  for (long i = 0; i < p.degree(); ++i) {
    BigInt c = p.coefficient(static_cast<std::size_t>(i));
    if (c < 0) c = -c;
    if (c > max_coeff) max_coeff = c;
  }
  long bound = static_cast<long>((max_coeff / lead).convert_to<long>()) + 2;
  long max_den = lead.convert_to<long>();
  std::vector<BigRational> roots;
  for (long q = 1; q <= max_den; ++q)
    for (long n = -bound * q; n <= bound * q; ++n) {
      BigRational r(n, q);
      if (p(r) == 0) roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

TEST(RationalRoots, AgreesWithBruteForceEnumeration) {
  std::mt19937_64 rng(38);
  std::uniform_int_distribution<int> coeff(-6, 6), lin(1, 4), deg(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial p{1};
    // Mix guaranteed rational factors with random irreducible-looking ones.
    int linear_factors = deg(rng) - 1;
    for (int i = 0; i < linear_factors; ++i) p = p * IntPolynomial{coeff(rng), lin(rng)};
    p = p * IntPolynomial{coeff(rng), coeff(rng), lin(rng)};
    if (p.is_zero()) continue;
    EXPECT_EQ(rational_roots(p), brute_force_roots(p)) << p.to_string();
  }
}

TEST(CoeffBound, BoundAndTrivialCases) {
  IntPolynomial p17{0, -1, 0, 1, 1, -2, -1};  // -t^6 - 2t^5 + t^4 + t^3 - t
  BigRational bound = coeff_bound(p17, BigRational(1, 2));
  EXPECT_EQ(bound, BigRational(49, 64));
  EXPECT_EQ(bound, BigRational(1, 64) + BigRational(1, 16) + BigRational(1, 16) + BigRational(1, 8) + BigRational(1, 2));
  EXPECT_EQ(coeff_bound(IntPolynomial{0, 1}, BigRational(1)), BigRational(1));
  EXPECT_EQ(coeff_bound(IntPolynomial{0, 1, 1}, BigRational(1, 2)), BigRational(3, 4));
  EXPECT_THROW(coeff_bound(IntPolynomial{1, 1}, BigRational(1)), DomainError);
  EXPECT_THROW(coeff_bound(IntPolynomial{0, 1}, BigRational(0)), DomainError);
}

TEST(IntPolynomial, ArithmeticAndPrinting) {
  IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-1, 1, 1};  // (y-1)(y^2+y-1)
  EXPECT_EQ(p, (IntPolynomial{1, -2, 0, 1}));
  EXPECT_EQ(p.to_string("y"), "y^3 - 2y + 1");
  EXPECT_EQ((p - p).degree(), -1);
}

// ---- compare_log -------------------------------------------------------------

TEST(CompareLog, PowerCertificates) {
  auto first = compare_log(3, 2, 3, 2);
  EXPECT_EQ(first.ordering, std::strong_ordering::greater);
  EXPECT_EQ(first.lhs, 9);
  EXPECT_EQ(first.rhs, 8);
  auto second = compare_log(5, 3, 3, 2);
  EXPECT_EQ(second.ordering, std::strong_ordering::less);
  EXPECT_EQ(second.lhs, 25);
  EXPECT_EQ(second.rhs, 27);
  EXPECT_EQ(compare_log(4, 2, 2, 1).ordering, std::strong_ordering::equal);
  EXPECT_EQ(compare_log(4, 2, -1, 1).ordering, std::strong_ordering::greater);
  EXPECT_THROW(compare_log(1, 2, 1, 1), DomainError);
  EXPECT_THROW(compare_log(3, 2, 1, 0), DomainError);
}

TEST(CompareLog, AgreesWithHundredDigitLogarithms) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> base(2, 40), num(1, 60), den(1, 12);
  int checked = 0;
  while (checked < 50) {
    int a = base(rng), b = base(rng), p = num(rng), q = den(rng);
    Dec100 lg = boost::multiprecision::log(Dec100(a)) / boost::multiprecision::log(Dec100(b));
    Dec100 gap = lg - Dec100(p) / q;
    if (boost::multiprecision::abs(gap) <= Dec100("1e-5")) continue;
    auto got = compare_log(a, b, p, q).ordering;
    EXPECT_EQ(got, gap > 0 ? std::strong_ordering::greater : std::strong_ordering::less)
        << a << " " << b << " " << p << "/" << q;
    ++checked;
  }
}

// ---- multivariate over Z[ω] ------------------------------------------------

MultiPolynomial conjugate_factor(int i, int j) {
  return MultiPolynomial::x() + ZOmega::omega_power(i) * MultiPolynomial::y() +
         ZOmega::omega_power(j) * MultiPolynomial::z();
}

TEST(ExpandProduct, TwoConjugateFactors) {
  auto product = expand_product({conjugate_factor(1, 2), conjugate_factor(2, 1)});
  auto x = MultiPolynomial::x(), y = MultiPolynomial::y(), z = MultiPolynomial::z();
  auto expected = x * x + y * y + z * z - x * y - x * z - y * z;
  EXPECT_EQ(product, expected);
  EXPECT_EQ(product.to_string(), "x^2 - xy - xz + y^2 - yz + z^2");
  EXPECT_EQ(expand_product({x, x}), x * x);
  EXPECT_THROW(expand_product({}), DomainError);
}

// Independent oracle: the nine complex linear forms, multiplied numerically.
long double nine_factor_oracle(int x, int y, int z) {
  const std::complex<long double> w = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> / 3.0L);
  std::complex<long double> acc = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc *= std::complex<long double>(x) + std::pow(w, i) * (long double)y + std::pow(w, j) * (long double)z;
  EXPECT_LT(std::abs(acc.imag()), 1e-6L * (1 + std::abs(acc.real())));
  return acc.real();
}

TEST(ExpandProduct, NineFactorsMatchOracleThenClosedForm) {
  std::vector<MultiPolynomial> factors;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) factors.push_back(conjugate_factor(i, j));
  auto product = expand_product(factors);

  std::mt19937_64 rng(65);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int k = 0; k < 10; ++k) {
    int x = coord(rng), y = coord(rng), z = coord(rng);
    long double oracle = nine_factor_oracle(x, y, z);
    ZOmega exact = product.evaluate({x, y, z});
    ASSERT_TRUE(exact.is_integer());
    EXPECT_NEAR(exact.a.convert_to<long double>(), oracle, 1e-6L * (1 + std::abs(oracle)));
  }

  auto x = MultiPolynomial::x(), y = MultiPolynomial::y(), z = MultiPolynomial::z();
  auto cubes = x.pow(3) + y.pow(3) + z.pow(3);
  auto expected = cubes.pow(3) - ZOmega{27, 0} * x.pow(3) * y.pow(3) * z.pow(3);
  EXPECT_EQ(product, expected);
  EXPECT_EQ(product.coefficient(Monomial{9, 0, 0}), (ZOmega{1, 0}));
}

TEST(ExpandProduct, ConjugationClosedMultisetsHaveIntegerCoefficients) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> idx(0, 2), count(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultiPolynomial> factors;
    int pairs = count(rng);
    for (int k = 0; k < pairs; ++k) {
      int i = idx(rng), j = idx(rng);
      factors.push_back(conjugate_factor(i, j));
      factors.push_back(conjugate_factor(-i, -j));
    }
    EXPECT_TRUE(expand_product(factors).has_integer_coefficients());
  }
  EXPECT_FALSE(expand_product({conjugate_factor(1, 0)}).has_integer_coefficients());
}

TEST(ZOmega, ReductionRules) {
  ZOmega w = ZOmega::omega_power(1);
  EXPECT_EQ(w * w, ZOmega::omega_power(2));
  EXPECT_EQ(w * w * w, (ZOmega{1, 0}));
  EXPECT_EQ((ZOmega{1, 0} + w + w * w), (ZOmega{0, 0}));
  EXPECT_EQ(w.conjugate(), ZOmega::omega_power(2));
}

}  // namespace
}  // namespace coffin::exactnum
