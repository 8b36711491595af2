#include "coffin/euclid/plane.hpp"

namespace coffin::euclid {

namespace {

using Kind = GeometryError::Kind;

bool is_zero(const ExactReal& v) { return v.sign() == 0; }

std::vector<Point> sorted_pair(Point p, Point q) {
  if (lex_compare(p, q) == std::strong_ordering::greater) std::swap(p, q);
  return {std::move(p), std::move(q)};
}

std::vector<Point> line_line(const Line& l, const Line& m) {
  ExactReal det = l.a() * m.b() - m.a() * l.b();
  if (is_zero(det)) {
    if (l == m) throw GeometryError(Kind::CoincidentObjects, "lines coincide");
    return {};
  }
  return {Point{(l.b() * m.c() - m.b() * l.c()) / det, (l.c() * m.a() - m.c() * l.a()) / det}};
}

std::vector<Point> line_circle(const Line& l, const Circle& c) {
  ExactReal norm_sq = l.a() * l.a() + l.b() * l.b();
  ExactReal offset = l.evaluate(c.center);
  Point foot{c.center.x - l.a() * offset / norm_sq, c.center.y - l.b() * offset / norm_sq};
  ExactReal half_chord_sq = c.radius_sq - offset * offset / norm_sq;
  int s = half_chord_sq.sign();
  if (s < 0) return {};
  if (s == 0) return {foot};
  ExactReal t = ExactReal::sqrt(half_chord_sq / norm_sq);
  Point step = t * l.direction();
  return sorted_pair(foot - step, foot + step);
}

std::vector<Point> circle_circle(const Circle& c, const Circle& d) {
  if (c.center == d.center) {
    if (c.radius_sq == d.radius_sq) throw GeometryError(Kind::CoincidentObjects, "circles coincide");
    return {};
  }
  // Subtracting the two circle equations leaves the radical line.
  const Point& p = c.center;
  const Point& q = d.center;
  Line radical(ExactReal(2) * (q.x - p.x), ExactReal(2) * (q.y - p.y),
               (dot(p, p) - c.radius_sq) - (dot(q, q) - d.radius_sq));
  return line_circle(radical, c);
}

}  // namespace

std::string to_string(GeometryError::Kind kind) {
  switch (kind) {
    case Kind::NoIntersection:
      return "NoIntersection";
    case Kind::TangentCountMismatch:
      return "TangentCountMismatch";
    case Kind::CoincidentObjects:
      return "CoincidentObjects";
    case Kind::DegenerateAngle:
      return "DegenerateAngle";
    case Kind::DegenerateLine:
      return "DegenerateLine";
    case Kind::PointInsideCircle:
      return "PointInsideCircle";
    case Kind::PointOnCircle:
      return "PointOnCircle";
  }
  return "GeometryError";
}

bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

std::strong_ordering lex_compare(const Point& p, const Point& q) {
  if (auto c = compare(p.x, q.x); c != 0) return c;
  return compare(p.y, q.y);
}

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(const ExactReal& k, const Point& p) { return {k * p.x, k * p.y}; }

ExactReal dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
ExactReal cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Line::Line(ExactReal a, ExactReal b, ExactReal c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (is_zero(a_) && is_zero(b_)) throw GeometryError(Kind::DegenerateLine, "line with a = b = 0");
}

Line Line::through(const Point& p, const Point& q) {
  ExactReal a = q.y - p.y;
  ExactReal b = p.x - q.x;
  if (is_zero(a) && is_zero(b)) throw GeometryError(Kind::DegenerateLine, "line through coincident points");
  ExactReal c = -(a * p.x + b * p.y);
  return Line(std::move(a), std::move(b), std::move(c));
}

ExactReal Line::evaluate(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }

bool operator==(const Line& l, const Line& m) {
  return is_zero(l.a_ * m.b_ - m.a_ * l.b_) && is_zero(l.a_ * m.c_ - m.a_ * l.c_) &&
         is_zero(l.b_ * m.c_ - m.b_ * l.c_);
}

ExactReal Circle::evaluate(const Point& p) const { return distance_sq(p, center) - radius_sq; }

bool operator==(const Circle& c, const Circle& d) {
  return c.center == d.center && c.radius_sq == d.radius_sq;
}

ExactReal distance_sq(const Point& p, const Point& q) {
  ExactReal dx = p.x - q.x;
  ExactReal dy = p.y - q.y;
  return dx * dx + dy * dy;
}

ExactReal distance_sq(const Point& p, const Line& l) {
  ExactReal v = l.evaluate(p);
  return v * v / (l.a() * l.a() + l.b() * l.b());
}

std::vector<Point> intersections(const Curve& first, const Curve& second) {
  return std::visit(
      [](const auto& u, const auto& v) -> std::vector<Point> {
        using U = std::decay_t<decltype(u)>;
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<U, Line> && std::is_same_v<V, Line>) {
          return line_line(u, v);
        } else if constexpr (std::is_same_v<U, Line>) {
          return line_circle(u, v);
        } else if constexpr (std::is_same_v<V, Line>) {
          return line_circle(v, u);
        } else {
          return circle_circle(u, v);
        }
      },
      first, second);
}

Point intersect(const Curve& first, const Curve& second, Selector selector) {
  std::vector<Point> points = intersections(first, second);
  if (points.empty()) throw GeometryError(Kind::NoIntersection, "objects do not intersect");
  switch (selector) {
    case Selector::Only:
      if (points.size() != 1)
        throw GeometryError(Kind::TangentCountMismatch, "selector 'only' on a two-point intersection");
      return points.front();
    case Selector::First:
      return points.front();
    case Selector::Second:
      if (points.size() != 2)
        throw GeometryError(Kind::TangentCountMismatch, "selector 'second' on a single-point intersection");
      return points.back();
  }
  return points.front();
}

Point rotate60(const Point& p, const Point& center, Rotation direction) {
  ExactReal half(BigRational(1, 2));
  ExactReal sin60 = ExactReal::sqrt(ExactReal(3)) * half;
  if (direction == Rotation::CW) sin60 = -sin60;
  Point d = p - center;
  return {center.x + half * d.x - sin60 * d.y, center.y + sin60 * d.x + half * d.y};
}

Point foot_of_perpendicular(const Point& p, const Line& l) {
  ExactReal k = l.evaluate(p) / (l.a() * l.a() + l.b() * l.b());
  return p - k * l.normal();
}

Point midpoint(const Point& p, const Point& q) {
  ExactReal half(BigRational(1, 2));
  return half * (p + q);
}

Line parallel_through(const Point& p, const Line& l) {
  return Line(l.a(), l.b(), -(l.a() * p.x + l.b() * p.y));
}

Line perpendicular_through(const Point& p, const Line& l) {
  return Line(l.b(), -l.a(), -(l.b() * p.x - l.a() * p.y));
}

bool parallel(const Line& l, const Line& m) { return is_zero(l.a() * m.b() - m.a() * l.b()); }

bool perpendicular(const Line& l, const Line& m) { return is_zero(l.a() * m.a() + l.b() * m.b()); }

bool collinear(const Point& p, const Point& q, const Point& r) { return is_zero(cross(q - p, r - p)); }

bool between(const Point& p, const Point& q, const Point& r) {
  if (!collinear(p, q, r)) return false;
  ExactReal t = dot(q - p, r - p);
  return t.sign() >= 0 && compare(t, dot(r - p, r - p)) <= 0;
}

AngleIncircle incircle_tangent_points(const Point& vertex, const Point& ray1_dir, const Point& ray2_dir,
                                      const ExactReal& tangent_len) {
  if (is_zero(cross(ray1_dir, ray2_dir)))
    throw GeometryError(Kind::DegenerateAngle, "angle rays are collinear");
  if (tangent_len.sign() <= 0) throw GeometryError(Kind::DegenerateAngle, "tangent length must be positive");
  ExactReal len1 = ExactReal::sqrt(dot(ray1_dir, ray1_dir));
  ExactReal len2 = ExactReal::sqrt(dot(ray2_dir, ray2_dir));
  Point a = vertex + (tangent_len / len1) * ray1_dir;
  Point b = vertex + (tangent_len / len2) * ray2_dir;
  Line normal_at_a(ray1_dir.x, ray1_dir.y, -dot(ray1_dir, a));
  Line normal_at_b(ray2_dir.x, ray2_dir.y, -dot(ray2_dir, b));
  Point center = intersect(normal_at_a, normal_at_b, Selector::Only);
  ExactReal r2 = distance_sq(center, a);
  return {Circle{center, r2}, a, b};
}

std::pair<Point, Point> tangency_points_from(const Point& p, const Circle& c) {
  ExactReal power = distance_sq(p, c.center) - c.radius_sq;
  int s = power.sign();
  if (s == 0) throw GeometryError(Kind::PointOnCircle, "point lies on the circle");
  if (s < 0) throw GeometryError(Kind::PointInsideCircle, "point lies inside the circle");
  // Tangency points are where the circle meets the circle about p of radius
  // equal to the tangent length.
  std::vector<Point> points = intersections(c, Circle{p, power});
  if (points.size() != 2) throw GeometryError(Kind::TangentCountMismatch, "expected two tangency points");
  return {points[0], points[1]};
}

Line tangent_line_from(const Point& p, const Circle& c, Selector selector) {
  auto [first, second] = tangency_points_from(p, c);
  switch (selector) {
    case Selector::First:
      return Line::through(p, first);
    case Selector::Second:
      return Line::through(p, second);
    case Selector::Only:
      break;
  }
  throw GeometryError(Kind::TangentCountMismatch, "an exterior point has two tangents; use first or second");
}

}  // namespace coffin::euclid
