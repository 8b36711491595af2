#include "coffin/exactnum/int_polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace coffin::exactnum {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational IntPolynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

ExactReal IntPolynomial::operator()(const ExactReal& x) const {
  ExactReal acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ExactReal(BigRational(*it));
  return acc;
}

double IntPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  BigInt m = n < 0 ? BigInt(-n) : n;
  if (m == 0) throw DomainError("divisors of zero are unbounded");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<BigRational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  // Strip the factor x^k; its only root is 0.
  std::size_t shift = 0;
  while (p.coefficient(shift) == 0) ++shift;
  std::vector<BigRational> roots;
  if (shift > 0) roots.emplace_back(0);
  const auto& c = p.coefficients();
  IntPolynomial reduced(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(shift), c.end()));
  if (reduced.degree() >= 1) {
    for (const BigInt& num : positive_divisors(reduced.coefficient(0))) {
      for (const BigInt& den : positive_divisors(reduced.leading())) {
        for (int s : {1, -1}) {
          BigRational candidate(BigInt(s * num), den);
          if (reduced(candidate) == 0) roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

BigRational coeff_bound(const IntPolynomial& p, const BigRational& r) {
  if (p.coefficient(0) != 0) throw DomainError("coeff_bound requires a zero constant term");
  if (r.sign() <= 0) throw DomainError("coeff_bound requires r > 0");
  BigRational total(0);
  BigRational power(1);
  for (const BigInt& c : p.coefficients()) {
    total += BigRational(c < 0 ? BigInt(-c) : c) * power;
    power *= r;
  }
  return total;
}

}  // namespace coffin::exactnum
