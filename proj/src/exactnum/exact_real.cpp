#include "coffin/exactnum/exact_real.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>

#include "coffin/exactnum/quadratic_tower.hpp"

namespace coffin::exactnum {

namespace detail {

struct Node {
  ExactReal::Op op = ExactReal::Op::Leaf;
  BigRational value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  mutable std::mutex mu;
  mutable unsigned cached_precision = 0;
  mutable std::optional<RationalInterval> cached;
};

}  // namespace detail

namespace {

using detail::Node;

constexpr unsigned kMaxPrecision = 1u << 20;
constexpr unsigned kMaxHalvings = 4096;
constexpr std::array<unsigned, 2> kFastPathPrecisions{64, 256};

BigRational pow2(unsigned p) { return BigRational(BigInt(1) << p); }

BigRational round_down(const BigRational& q, unsigned p) {
  BigRational scale = pow2(p);
  return BigRational(floor(q * scale)) / scale;
}

BigRational round_up(const BigRational& q, unsigned p) {
  BigRational scale = pow2(p);
  return BigRational(ceil(q * scale)) / scale;
}

RationalInterval outward(const BigRational& lo, const BigRational& hi, unsigned p) {
  return {round_down(lo, p), round_up(hi, p)};
}

RationalInterval hull(std::array<BigRational, 4> v, unsigned p) {
  auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  return outward(*mn, *mx, p);
}

std::shared_ptr<const Node> make_leaf(BigRational value) {
  auto n = std::make_shared<Node>();
  n->op = ExactReal::Op::Leaf;
  n->value = std::move(value);
  n->cached_precision = std::numeric_limits<unsigned>::max();
  n->cached = RationalInterval{n->value, n->value};
  return n;
}

std::optional<RationalInterval> eval_node(const Node& n, unsigned p);

std::optional<RationalInterval> compute(const Node& n, unsigned p) {
  using Op = ExactReal::Op;
  auto a = eval_node(*n.lhs, p);
  if (!a) return std::nullopt;
  switch (n.op) {
    case Op::Neg:
      return RationalInterval{-a->hi, -a->lo};
    case Op::Sqrt: {
      BigRational lo = a->lo.sign() < 0 ? BigRational(0) : a->lo;
      BigRational hi = a->hi.sign() < 0 ? BigRational(0) : a->hi;
      BigRational scale = pow2(p);
      BigRational sq = scale * scale;
      BigInt low = isqrt(floor(lo * sq));
      BigInt top = ceil(hi * sq);
      BigInt high = isqrt(top);
      if (high * high < top) high += 1;
      return RationalInterval{BigRational(low) / scale, BigRational(high) / scale};
    }
    default:
      break;
  }
  auto b = eval_node(*n.rhs, p);
  if (!b) return std::nullopt;
  switch (n.op) {
    case Op::Add:
      return outward(a->lo + b->lo, a->hi + b->hi, p);
    case Op::Sub:
      return outward(a->lo - b->hi, a->hi - b->lo, p);
    case Op::Mul:
      return hull({a->lo * b->lo, a->lo * b->hi, a->hi * b->lo, a->hi * b->hi}, p);
    case Op::Div:
      if (!b->excludes_zero()) return std::nullopt;
      return hull({a->lo / b->lo, a->lo / b->hi, a->hi / b->lo, a->hi / b->hi}, p);
    default:
      throw InternalError("unexpected node kind in interval evaluation");
  }
}

std::optional<RationalInterval> eval_node(const Node& n, unsigned p) {
  {
    std::lock_guard lock(n.mu);
    if (n.cached && n.cached_precision >= p) return n.cached;
  }
  auto fresh = compute(n, p);
  if (!fresh) return std::nullopt;
  std::lock_guard lock(n.mu);
  if (n.cached) {
    // Both brackets contain the value, so their intersection does too.
    n.cached = RationalInterval{std::max(n.cached->lo, fresh->lo),
                                std::min(n.cached->hi, fresh->hi)};
  } else {
    n.cached = std::move(*fresh);
  }
  n.cached_precision = std::max(n.cached_precision, p);
  return n.cached;
}

std::optional<int> interval_sign(const ExactReal& x) {
  for (unsigned p : kFastPathPrecisions) {
    auto iv = x.evaluate(p);
    if (iv && iv->excludes_zero()) return iv->lo.sign() > 0 ? 1 : -1;
  }
  return std::nullopt;
}

std::string wrap(const ExactReal& x) {
  std::string s = x.expression();
  if (x.op() == ExactReal::Op::Leaf && s.find('/') == std::string::npos && s[0] != '-') return s;
  if (x.op() == ExactReal::Op::Sqrt) return s;
  return "(" + s + ")";
}

}  // namespace

ExactReal::ExactReal() : ExactReal(BigRational(0)) {}

ExactReal::ExactReal(BigRational value) : node_(make_leaf(std::move(value))) {}

ExactReal::ExactReal(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

ExactReal ExactReal::make(Op op, const ExactReal& a, const ExactReal& b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return ExactReal(std::move(n));
}

ExactReal::Op ExactReal::op() const { return node_->op; }

const BigRational* ExactReal::as_rational() const {
  return node_->op == Op::Leaf ? &node_->value : nullptr;
}

ExactReal ExactReal::lhs() const {
  if (!node_->lhs) throw InternalError("leaf has no operands");
  return ExactReal(node_->lhs);
}

ExactReal ExactReal::rhs() const {
  if (!node_->rhs) throw InternalError("node has no right operand");
  return ExactReal(node_->rhs);
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  const BigRational* qa = a.as_rational();
  const BigRational* qb = b.as_rational();
  if (qa && qb) return ExactReal(BigRational(*qa + *qb));
  if (qa && *qa == 0) return b;
  if (qb && *qb == 0) return a;
  return ExactReal::make(ExactReal::Op::Add, a, b);
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  const BigRational* qa = a.as_rational();
  const BigRational* qb = b.as_rational();
  if (qa && qb) return ExactReal(BigRational(*qa - *qb));
  if (qb && *qb == 0) return a;
  if (qa && *qa == 0) return -b;
  return ExactReal::make(ExactReal::Op::Sub, a, b);
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  const BigRational* qa = a.as_rational();
  const BigRational* qb = b.as_rational();
  if (qa && qb) return ExactReal(BigRational(*qa * *qb));
  if ((qa && *qa == 0) || (qb && *qb == 0)) return ExactReal();
  if (qa && *qa == 1) return b;
  if (qb && *qb == 1) return a;
  return ExactReal::make(ExactReal::Op::Mul, a, b);
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  const BigRational* qa = a.as_rational();
  const BigRational* qb = b.as_rational();
  if (qb) {
    if (*qb == 0) throw DomainError("division by zero");
    if (qa) return ExactReal(BigRational(*qa / *qb));
    if (*qb == 1) return a;
  } else if (b.sign() == 0) {
    throw DomainError("division by an expression equal to zero");
  }
  if (qa && *qa == 0) return ExactReal();
  return ExactReal::make(ExactReal::Op::Div, a, b);
}

ExactReal ExactReal::operator-() const {
  if (const BigRational* q = as_rational()) return ExactReal(BigRational(-*q));
  if (op() == Op::Neg) return lhs();
  auto n = std::make_shared<Node>();
  n->op = Op::Neg;
  n->lhs = node_;
  return ExactReal(std::move(n));
}

ExactReal ExactReal::sqrt(const ExactReal& operand) {
  if (const BigRational* q = operand.as_rational()) {
    if (q->sign() < 0) throw DomainError("square root of negative rational " + to_string(*q));
    if (auto root = exact_sqrt(*q)) return ExactReal(*root);
  } else {
    int s = operand.sign();
    if (s < 0) throw DomainError("square root of a negative expression");
    if (s == 0) return ExactReal();
  }
  auto n = std::make_shared<Node>();
  n->op = Op::Sqrt;
  n->lhs = operand.node_;
  return ExactReal(std::move(n));
}

std::optional<RationalInterval> ExactReal::evaluate(unsigned precision) const {
  return eval_node(*node_, precision);
}

RationalInterval ExactReal::interval() const {
  {
    std::lock_guard lock(node_->mu);
    if (node_->cached) return *node_->cached;
  }
  // Division nodes may need more than the base precision before the first
  // bracket exists.
  for (unsigned p = 32; p <= kMaxPrecision; p *= 2) {
    if (auto iv = evaluate(p)) return *iv;
  }
  throw InternalError("no interval bracket within the precision limit");
}

RationalInterval ExactReal::refine(const BigRational& width) const {
  if (width.sign() <= 0) throw DomainError("refinement width must be positive");
  BigRational target(1);
  unsigned halvings = 0;
  unsigned p = 32;
  RationalInterval current = interval();
  for (;;) {
    while (current.width() > target) {
      auto iv = evaluate(p);
      if (iv && iv->width() <= target) {
        current = *iv;
        break;
      }
      p *= 2;
      if (p > kMaxPrecision) throw InternalError("interval refinement did not converge");
    }
    if (target <= width) return current;
    target /= 2;
    if (++halvings > kMaxHalvings) {
      throw InternalError("interval refinement refused after 4096 halvings");
    }
  }
}

int ExactReal::sign() const {
  if (const BigRational* q = as_rational()) return q->sign();
  if (auto s = interval_sign(*this)) return *s;
  QuadraticTower tower;
  return tower.sign(tower.normalize(*this));
}

double ExactReal::approx() const {
  if (const BigRational* q = as_rational()) return q->convert_to<double>();
  return refine(BigRational(1, BigInt(1) << 64)).midpoint().convert_to<double>();
}

std::string ExactReal::decimal(int significant_digits) const {
  if (const BigRational* q = as_rational()) return to_significant(*q, significant_digits);
  // 4 bits per decimal digit beyond the magnitude of the value.
  RationalInterval coarse = refine(BigRational(1));
  BigRational magnitude = std::max(abs(coarse.lo), abs(coarse.hi)) + 1;
  auto bits = static_cast<unsigned>(4 * significant_digits + 16 + numerator(magnitude).str().size() * 4);
  BigRational width(1, BigInt(1) << bits);
  return to_significant(refine(width).midpoint(), significant_digits);
}

std::string ExactReal::expression() const {
  switch (op()) {
    case Op::Leaf:
      return to_string(node_->value);
    case Op::Neg:
      return "-" + wrap(lhs());
    case Op::Sqrt:
      return "sqrt(" + lhs().expression() + ")";
    case Op::Add:
      return lhs().expression() + " + " + wrap(rhs());
    case Op::Sub:
      return lhs().expression() + " - " + wrap(rhs());
    case Op::Mul:
      return wrap(lhs()) + "*" + wrap(rhs());
    case Op::Div:
      return wrap(lhs()) + "/" + wrap(rhs());
  }
  return {};
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) {
  const BigRational* qx = x.as_rational();
  const BigRational* qy = y.as_rational();
  if (qx && qy) return compare(*qx, *qy);
  if (x.identity() == y.identity()) return std::strong_ordering::equal;
  for (unsigned p : kFastPathPrecisions) {
    auto ix = x.evaluate(p);
    auto iy = y.evaluate(p);
    if (ix && iy) {
      if (ix->hi < iy->lo) return std::strong_ordering::less;
      if (iy->hi < ix->lo) return std::strong_ordering::greater;
    }
  }
  QuadraticTower tower;
  int s = tower.sign(tower.sub(tower.normalize(x), tower.normalize(y)));
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactReal abs(const ExactReal& x) { return x.sign() < 0 ? -x : x; }

ExactReal square(const ExactReal& x) { return x * x; }

}  // namespace coffin::exactnum
