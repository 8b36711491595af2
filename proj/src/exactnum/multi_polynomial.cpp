#include "coffin/exactnum/multi_polynomial.hpp"

#include <tuple>

namespace coffin::exactnum {

ZOmega ZOmega::omega_power(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    default:
      return {-1, -1};  // ω² = -1 - ω
  }
}

// conj(a + bω) = a + bω² = (a - b) - bω
ZOmega ZOmega::conjugate() const { return {a - b, -b}; }

// (a + bω)(c + dω) = ac + (ad + bc)ω + bdω² = (ac - bd) + (ad + bc - bd)ω
ZOmega operator*(const ZOmega& x, const ZOmega& y) {
  BigInt bd = x.b * y.b;
  return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

std::string ZOmega::to_string() const {
  if (b == 0) return a.str();
  BigInt mag = b < 0 ? BigInt(-b) : b;
  std::string w = (mag == 1 ? std::string() : mag.str()) + "w";
  if (a == 0) return (b < 0 ? "-" : "") + w;
  return "(" + a.str() + (b < 0 ? " - " : " + ") + w + ")";
}

unsigned total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
  unsigned dl = total_degree(lhs), dr = total_degree(rhs);
  if (dl != dr) return dl > dr;
  return std::tie(lhs[0], lhs[1], lhs[2]) > std::tie(rhs[0], rhs[1], rhs[2]);
}

MultiPolynomial MultiPolynomial::constant(const ZOmega& c) {
  MultiPolynomial p;
  p.add_term({0, 0, 0}, c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(int index) {
  Monomial m{0, 0, 0};
  m.at(static_cast<std::size_t>(index)) = 1;
  MultiPolynomial p;
  p.add_term(m, {1, 0});
  return p;
}

ZOmega MultiPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ZOmega{0, 0} : it->second;
}

bool MultiPolynomial::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

void MultiPolynomial::add_term(const Monomial& m, const ZOmega& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPolynomial operator+(const MultiPolynomial& p, const MultiPolynomial& q) {
  MultiPolynomial r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

MultiPolynomial operator-(const MultiPolynomial& p, const MultiPolynomial& q) {
  MultiPolynomial r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, ZOmega{0, 0} - c);
  return r;
}

MultiPolynomial operator*(const MultiPolynomial& p, const MultiPolynomial& q) {
  MultiPolynomial r;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      r.add_term({mp[0] + mq[0], mp[1] + mq[1], mp[2] + mq[2]}, cp * cq);
    }
  }
  return r;
}

MultiPolynomial operator*(const ZOmega& c, const MultiPolynomial& p) {
  return MultiPolynomial::constant(c) * p;
}

MultiPolynomial MultiPolynomial::pow(unsigned k) const {
  MultiPolynomial result = constant({1, 0});
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

MultiPolynomial MultiPolynomial::compose(const std::array<MultiPolynomial, 3>& images) const {
  MultiPolynomial out;
  for (const auto& [m, c] : terms_) {
    MultiPolynomial term = constant(c);
    for (std::size_t v = 0; v < 3; ++v) term = term * images[v].pow(m[v]);
    out = out + term;
  }
  return out;
}

ZOmega MultiPolynomial::evaluate(const std::array<BigInt, 3>& point) const {
  ZOmega total{0, 0};
  for (const auto& [m, c] : terms_) {
    BigInt v = 1;
    for (std::size_t i = 0; i < 3; ++i) v *= exactnum::pow(point[i], m[i]);
    total = total + c * ZOmega{v, 0};
  }
  return total;
}

std::string MultiPolynomial::to_string(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = c.is_integer() && c.a < 0;
    if (negative) coeff = BigInt(-c.a).str();
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string vars;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      vars += names[i];
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) out += coeff;
    else if (coeff == "1") out += vars;
    else out += coeff + (c.is_integer() ? "" : "*") + vars;
  }
  return out;
}

MultiPolynomial expand_product(const std::vector<MultiPolynomial>& factors) {
  if (factors.empty()) throw DomainError("expand_product needs at least one factor");
  MultiPolynomial acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
  return acc;
}

}  // namespace coffin::exactnum
