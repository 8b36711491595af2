#include "coffin/exactnum/rational.hpp"

#include <algorithm>
#include <cctype>

namespace coffin::exactnum {

namespace {

BigInt pow10(unsigned k) { return pow(BigInt(10), k); }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// Round-half-even of a nonnegative rational to an integer.
BigInt round_half_even(const BigRational& q) {
  BigInt fl = floor(q);
  BigRational frac = q - BigRational(fl);
  BigRational half(1, 2);
  if (frac > half) return fl + 1;
  if (frac < half) return fl;
  return (fl % 2 == 0) ? fl : fl + 1;
}

// GMP auto-detects the base, so "024" would be read as octal.
BigInt decimal_int(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto fail = [&] {
    return DomainError("malformed rational literal '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigRational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    BigInt d = decimal_int(den);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = BigRational(decimal_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw fail();
    BigInt w = decimal_int(whole);
    BigInt f = decimal_int(frac);
    value = BigRational(w) + BigRational(f, pow10(static_cast<unsigned>(frac.size())));
  } else {
    if (!all_digits(s)) throw fail();
    value = BigRational(decimal_int(s));
  }
  return negative ? BigRational(-value) : value;
}

std::string to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

int sign(const BigRational& q) { return q.sign(); }

BigRational abs(const BigRational& q) { return q.sign() < 0 ? BigRational(-q) : q; }

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow(BigRational(1) / base, -exponent);
  }
  auto e = static_cast<unsigned>(exponent);
  return BigRational(pow(numerator(base), e), pow(denominator(base), e));
}

BigInt floor(const BigRational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt quotient = n / d;  // truncates toward zero
  if (n < 0 && quotient * d != n) quotient -= 1;
  return quotient;
}

BigInt ceil(const BigRational& q) { return -floor(BigRational(-q)); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<BigRational> exact_sqrt(const BigRational& q) {
  auto n = exact_sqrt(numerator(q));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(denominator(q));
  if (!d) return std::nullopt;
  return BigRational(*n, *d);
}

std::size_t digit_count(const BigInt& n) {
  if (n <= 0) throw DomainError("digit_count requires a positive integer");
  return n.str().size();
}

std::string to_significant(const BigRational& q, int digits) {
  if (digits < 1) throw DomainError("need at least one significant digit");
  if (q == 0) return "0";
  BigRational a = abs(q);
  long e = static_cast<long>(numerator(a).str().size()) -
           static_cast<long>(denominator(a).str().size());
  while (pow(BigRational(10), e) > a) --e;
  while (pow(BigRational(10), e + 1) <= a) ++e;
  long shift = digits - 1 - e;
  BigInt m = round_half_even(a * pow(BigRational(10), shift));
  if (m == pow10(static_cast<unsigned>(digits))) {
    m /= 10;
    --shift;
  }
  std::string body = m.str();
  std::string out;
  if (shift <= 0) {
    out = body + std::string(static_cast<std::size_t>(-shift), '0');
  } else {
    auto places = static_cast<std::size_t>(shift);
    if (body.size() <= places) body = std::string(places - body.size() + 1, '0') + body;
    out = body.substr(0, body.size() - places) + "." + body.substr(body.size() - places);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return q.sign() < 0 ? "-" + out : out;
}

std::strong_ordering compare(const BigRational& a, const BigRational& b) {
  int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace coffin::exactnum
