#include "coffin/exactnum/quadratic_tower.hpp"

#include <algorithm>
#include <bit>

namespace coffin::exactnum {

namespace {

using Element = QuadraticTower::Element;

struct Halves {
  Element low;
  Element high;  // empty means zero
};

// Splits an element of level <= lvl (lvl >= 1) into a + b√r(lvl-1).
Halves split(const Element& x, std::size_t lvl) {
  std::size_t half = std::size_t{1} << (lvl - 1);
  if (x.size() <= half) return {x, {}};
  return {Element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(half)),
          Element(x.begin() + static_cast<std::ptrdiff_t>(half), x.end())};
}

Element combine(const Element& low, const Element& high, std::size_t lvl) {
  std::size_t half = std::size_t{1} << (lvl - 1);
  Element out(2 * half);
  std::copy(low.begin(), low.end(), out.begin());
  std::copy(high.begin(), high.end(), out.begin() + static_cast<std::ptrdiff_t>(half));
  return QuadraticTower::trimmed(std::move(out));
}

Element scale(Element x, const BigRational& k) {
  for (auto& c : x) c *= k;
  return QuadraticTower::trimmed(std::move(x));
}

}  // namespace

std::size_t QuadraticTower::level(const Element& x) {
  return static_cast<std::size_t>(std::countr_zero(std::bit_ceil(x.size())));
}

bool QuadraticTower::is_zero(const Element& x) {
  return std::all_of(x.begin(), x.end(), [](const BigRational& c) { return c == 0; });
}

Element QuadraticTower::trimmed(Element x) {
  if (x.empty()) return Element{BigRational(0)};
  while (x.size() > 1) {
    std::size_t half = x.size() / 2;
    bool upper_zero = std::all_of(x.begin() + static_cast<std::ptrdiff_t>(half), x.end(),
                                  [](const BigRational& c) { return c == 0; });
    if (!upper_zero) break;
    x.resize(half);
  }
  return x;
}

Element QuadraticTower::add(const Element& x, const Element& y) const {
  Element out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return trimmed(std::move(out));
}

Element QuadraticTower::neg(const Element& x) const {
  Element out = x;
  for (auto& c : out) c = -c;
  return out;
}

Element QuadraticTower::sub(const Element& x, const Element& y) const {
  Element out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return trimmed(std::move(out));
}

Element QuadraticTower::mul(const Element& x, const Element& y) const {
  return mul_at(x, y, std::max(level(x), level(y)));
}

// (a + b√r)(c + d√r) = (ac + bd·r) + (ad + bc)√r
Element QuadraticTower::mul_at(const Element& x, const Element& y, std::size_t lvl) const {
  if (lvl == 0) return Element{x[0] * y[0]};
  auto [a, b] = split(x, lvl);
  auto [c, d] = split(y, lvl);
  const Element& r = radicands_[lvl - 1];
  Element low = mul(a, c);
  Element high{BigRational(0)};
  if (!b.empty() && !d.empty()) low = add(low, mul(mul(b, d), r));
  if (!d.empty()) high = add(high, mul(a, d));
  if (!b.empty()) high = add(high, mul(b, c));
  return combine(low, high, lvl);
}

Element QuadraticTower::inverse(const Element& x) const { return inverse_at(trimmed(x), level(trimmed(x))); }

// 1/(a + b√r) = (a - b√r) / (a² - b²r); the norm is nonzero because r is
// not a square one level down.
Element QuadraticTower::inverse_at(const Element& x, std::size_t lvl) const {
  if (lvl == 0) {
    if (x[0] == 0) throw DomainError("division by zero");
    return Element{BigRational(1) / x[0]};
  }
  auto [a, b] = split(x, lvl);
  const Element& r = radicands_[lvl - 1];
  Element norm = sub(mul(a, a), mul(mul(b, b), r));
  Element inv_norm = inverse(norm);
  return mul(combine(a, neg(b), lvl), inv_norm);
}

int QuadraticTower::sign(const Element& x) const {
  Element t = trimmed(x);
  return sign_at(t, level(t));
}

int QuadraticTower::sign_at(const Element& x, std::size_t lvl) const {
  if (lvl == 0) return x[0].sign();
  auto [a, b] = split(x, lvl);
  int sb = sign(b);
  int sa = sign(a);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  const Element& r = radicands_[lvl - 1];
  int sd = sign(sub(mul(a, a), mul(mul(b, b), r)));
  if (sd == 0) throw InternalError("tower radicand turned out to be a square");
  return sa * sd;
}

std::optional<Element> QuadraticTower::square_root_in_field(const Element& x) const {
  return sqrt_at(trimmed(x), depth());
}

std::optional<Element> QuadraticTower::sqrt_at(const Element& x, std::size_t lvl) const {
  if (lvl == 0) {
    auto root = exact_sqrt(x[0]);
    if (!root) return std::nullopt;
    return Element{*root};
  }
  auto [a, b] = split(x, lvl);
  const Element& r = radicands_[lvl - 1];
  if (b.empty() || is_zero(b)) {
    if (auto c = sqrt_at(a, lvl - 1)) return c;
    if (auto d = sqrt_at(div(a, r), lvl - 1)) return combine(Element{BigRational(0)}, *d, lvl);
    return std::nullopt;
  }
  // (c + d√r)² = a + b√r  ⇒  c² = (a ± n)/2 with n² = a² - b²r, d = b/(2c).
  Element norm = sub(mul(a, a), mul(mul(b, b), r));
  auto n = sqrt_at(norm, lvl - 1);
  if (!n) return std::nullopt;
  for (const Element& candidate : {add(a, *n), sub(a, *n)}) {
    auto c = sqrt_at(scale(candidate, BigRational(1, 2)), lvl - 1);
    if (c && !is_zero(*c)) {
      Element d = div(b, scale(*c, BigRational(2)));
      return combine(*c, d, lvl);
    }
  }
  return std::nullopt;
}

Element QuadraticTower::sqrt(const Element& x) {
  Element t = trimmed(x);
  int s = sign(t);
  if (s < 0) throw DomainError("square root of a negative value");
  if (s == 0) return Element{BigRational(0)};
  if (auto root = square_root_in_field(t)) {
    return sign(*root) < 0 ? neg(*root) : *root;
  }
  std::size_t top = depth();
  radicands_.push_back(t);
  Element out(std::size_t{1} << (top + 1));
  out[std::size_t{1} << top] = 1;
  return out;
}

Element QuadraticTower::normalize(const ExactReal& value) {
  if (const BigRational* q = value.as_rational()) return Element{*q};
  if (auto it = memo_.find(value.identity()); it != memo_.end()) return it->second.second;
  Element out;
  switch (value.op()) {
    case ExactReal::Op::Leaf:
      throw InternalError("leaf without a rational value");
    case ExactReal::Op::Neg:
      out = neg(normalize(value.lhs()));
      break;
    case ExactReal::Op::Add:
      out = add(normalize(value.lhs()), normalize(value.rhs()));
      break;
    case ExactReal::Op::Sub:
      out = sub(normalize(value.lhs()), normalize(value.rhs()));
      break;
    case ExactReal::Op::Mul:
      out = mul(normalize(value.lhs()), normalize(value.rhs()));
      break;
    case ExactReal::Op::Div:
      out = div(normalize(value.lhs()), normalize(value.rhs()));
      break;
    case ExactReal::Op::Sqrt:
      out = sqrt(normalize(value.lhs()));
      break;
  }
  memo_.emplace(value.identity(), std::make_pair(value, out));
  return out;
}

}  // namespace coffin::exactnum
