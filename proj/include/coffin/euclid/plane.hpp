#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coffin/exactnum/exact_real.hpp"

namespace coffin::euclid {

using exactnum::BigRational;
using exactnum::ExactReal;

class GeometryError : public std::runtime_error {
 public:
  enum class Kind {
    NoIntersection,
    TangentCountMismatch,
    CoincidentObjects,
    DegenerateAngle,
    DegenerateLine,
    PointInsideCircle,
    PointOnCircle,
  };

  GeometryError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(GeometryError::Kind kind);

struct Point {
  ExactReal x;
  ExactReal y;
};

bool operator==(const Point& p, const Point& q);
/// Lexicographic by (x, y) under exact compare.
std::strong_ordering lex_compare(const Point& p, const Point& q);

Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);
Point operator*(const ExactReal& k, const Point& p);

ExactReal dot(const Point& u, const Point& v);
ExactReal cross(const Point& u, const Point& v);

/// ax + by + c = 0 with (a, b) != (0, 0). Two lines are the same line when
/// their coefficient triples are proportional.
class Line {
 public:
  Line(ExactReal a, ExactReal b, ExactReal c);
  static Line through(const Point& p, const Point& q);

  const ExactReal& a() const { return a_; }
  const ExactReal& b() const { return b_; }
  const ExactReal& c() const { return c_; }

  /// a·x + b·y + c, zero exactly on the line.
  ExactReal evaluate(const Point& p) const;
  bool contains(const Point& p) const { return evaluate(p).sign() == 0; }
  Point direction() const { return {-b_, a_}; }
  Point normal() const { return {a_, b_}; }

  friend bool operator==(const Line& l, const Line& m);

 private:
  ExactReal a_, b_, c_;
};

struct Circle {
  Point center;
  ExactReal radius_sq;

  /// (x - cx)² + (y - cy)² - r², zero exactly on the circle.
  ExactReal evaluate(const Point& p) const;
  bool contains(const Point& p) const { return evaluate(p).sign() == 0; }
};

bool operator==(const Circle& c, const Circle& d);

using Curve = std::variant<Line, Circle>;

enum class Selector { Only, First, Second };
enum class Rotation { CCW, CW };

ExactReal distance_sq(const Point& p, const Point& q);
/// Squared distance from a point to a line.
ExactReal distance_sq(const Point& p, const Line& l);

/// All intersection points in lexicographic order (0, 1 or 2 of them).
/// Throws CoincidentObjects when the curves are identical.
std::vector<Point> intersections(const Curve& first, const Curve& second);

/// One intersection point. First/Second pick the lexicographically
/// smaller/larger of two points; Only requires exactly one point.
Point intersect(const Curve& first, const Curve& second, Selector selector);

Point rotate60(const Point& p, const Point& center, Rotation direction);
Point foot_of_perpendicular(const Point& p, const Line& l);
Point midpoint(const Point& p, const Point& q);

Line parallel_through(const Point& p, const Line& l);
Line perpendicular_through(const Point& p, const Line& l);

bool parallel(const Line& l, const Line& m);
bool perpendicular(const Line& l, const Line& m);
bool collinear(const Point& p, const Point& q, const Point& r);
/// q lies on the closed segment pr.
bool between(const Point& p, const Point& q, const Point& r);

struct AngleIncircle {
  Circle circle;
  Point tangency1;
  Point tangency2;
};

/// The circle tangent to both rays from `vertex` (directions `ray1_dir`,
/// `ray2_dir`) whose tangency points lie at distance `tangent_len` from the
/// vertex.
AngleIncircle incircle_tangent_points(const Point& vertex, const Point& ray1_dir, const Point& ray2_dir,
                                      const ExactReal& tangent_len);

/// Tangency points of the two tangents from an exterior point, in
/// lexicographic order.
std::pair<Point, Point> tangency_points_from(const Point& p, const Circle& c);
Line tangent_line_from(const Point& p, const Circle& c, Selector selector);

}  // namespace coffin::euclid
