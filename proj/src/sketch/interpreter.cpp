#include "coffin/sketch/interpreter.hpp"

#include <sstream>

namespace coffin::sketch {

namespace {

using euclid::GeometryError;
using euclid::Selector;

struct Value {
  GeomObject object;
  ValueType type;
};

using Env = std::map<std::string, Value>;

std::string digits(const ExactReal& v) { return v.sign() == 0 ? "0" : v.decimal(15); }

class Runner {
 public:
  Runner(const Program& program, Env env) : program_(program), env_(std::move(env)) {}

  Trace run() {
    Trace trace;
    trace.tools = program_.tools;
    for (std::size_t i = 0; i < program_.params.size(); ++i) {
      const Param& p = program_.params[i];
      trace.inputs.push_back({p.name, env_.at(p.name).object, p.type, i, "param"});
    }
    for (std::size_t i = 0; i < program_.statements.size(); ++i) {
      const Statement& s = program_.statements[i];
      try {
        if (s.kind == Statement::Kind::Bind) {
          GeomObject obj = construct(s);
          env_[s.name] = {obj, s.result};
          trace.entries.push_back({s.name, std::move(obj), s.result, i, s.callee});
        } else {
          AssertionReport report = check(s);
          report.statement = i;
          trace.assertions.push_back(std::move(report));
        }
      } catch (const GeometryError& e) {
        throw ExecutionError(i, s.line, s.to_string() + ": " + euclid::to_string(e.kind()) + ": " + e.what());
      } catch (const exactnum::DomainError& e) {
        throw ExecutionError(i, s.line, s.to_string() + ": " + e.what());
      }
    }
    return trace;
  }

 private:
  const Value& value(const Expr& e) const { return env_.at(e.name); }

  Point point(const Expr& e) const { return std::get<Point>(value(e).object); }
  Line line(const Expr& e) const { return std::get<Line>(value(e).object); }
  Circle circle(const Expr& e) const { return std::get<Circle>(value(e).object); }
  ExactReal scalar(const Expr& e) const {
    if (e.kind == Expr::Kind::Number) return ExactReal(e.number);
    return std::get<ExactReal>(value(e).object);
  }
  euclid::Curve curve(const Expr& e) const {
    const Value& v = value(e);
    if (v.type == ValueType::Line) return std::get<Line>(v.object);
    return std::get<Circle>(v.object);
  }

  Point select(const euclid::Curve& a, const euclid::Curve& b, const Expr& sel) const {
    using Kind = GeometryError::Kind;
    if (sel.kind == Expr::Kind::Name) {
      Selector s = sel.name == "only" ? Selector::Only : sel.name == "first" ? Selector::First : Selector::Second;
      return euclid::intersect(a, b, s);
    }
    Point ref = point(sel.args[0]);
    std::vector<Point> pts = euclid::intersections(a, b);
    if (pts.empty()) throw GeometryError(Kind::NoIntersection, "objects do not intersect");
    if (sel.name == "other") {
      std::vector<Point> rest;
      for (const Point& p : pts)
        if (!(p == ref)) rest.push_back(p);
      if (rest.size() == 1 && rest.size() < pts.size()) return rest.front();
      if (rest.empty()) throw GeometryError(Kind::NoIntersection, "the only intersection is " + sel.args[0].name);
      throw GeometryError(Kind::TangentCountMismatch, sel.args[0].name + " is not one of the intersection points");
    }
    // near(P)
    if (pts.size() == 1) return pts.front();
    auto order = compare(euclid::distance_sq(pts[0], ref), euclid::distance_sq(pts[1], ref));
    if (order == 0) throw GeometryError(Kind::TangentCountMismatch, "both intersections are equally near");
    return order < 0 ? pts[0] : pts[1];
  }

  GeomObject construct(const Statement& s) const {
    const auto& a = s.args;
    if (s.callee == "line") return Line::through(point(a[0]), point(a[1]));
    if (s.callee == "circle") {
      Point c = point(a[0]);
      if (a.size() == 3) return Circle{c, euclid::distance_sq(point(a[1]), point(a[2]))};
      if (a[1].kind == Expr::Kind::Name && value(a[1]).type == ValueType::Point)
        return Circle{c, euclid::distance_sq(c, point(a[1]))};
      ExactReal r = scalar(a[1]);
      if (r.sign() < 0) throw exactnum::DomainError("circle radius must be nonnegative");
      return Circle{c, r * r};
    }
    if (s.callee == "intersect") return select(curve(a[0]), curve(a[1]), a[2]);
    if (s.callee == "parallel_through") return euclid::parallel_through(point(a[0]), line(a[1]));
    if (s.callee == "perpendicular_through") return euclid::perpendicular_through(point(a[0]), line(a[1]));
    if (s.callee == "rotate60")
      return euclid::rotate60(point(a[0]), point(a[1]), a[2].name == "cw" ? euclid::Rotation::CW : euclid::Rotation::CCW);
    if (s.callee == "pick") {
      Point p = point(a[0]), q = point(a[1]);
      if (p == q) throw GeometryError(GeometryError::Kind::DegenerateLine, "pick on coincident points");
      return p + scalar(a[2]) * (q - p);
    }
    throw exactnum::InternalError("unhandled primitive " + s.callee);
  }

  static AssertionReport equality(const std::string& text, const ExactReal& lhs, const ExactReal& rhs) {
    bool pass = compare(lhs, rhs) == 0;
    return {text, pass, "lhs=" + digits(lhs) + " rhs=" + digits(rhs), 0};
  }

  AssertionReport check(const Statement& s) const {
    const auto& a = s.args;
    const std::string text = s.to_string();
    const std::string& p = s.callee;
    if (p == "equal_length") {
      return equality(text, euclid::distance_sq(point(a[0]), point(a[1])),
                      euclid::distance_sq(point(a[2]), point(a[3])));
    }
    if (p == "length_is") {
      ExactReal len = scalar(a[2]);
      if (len.sign() < 0) return {text, false, "negative length " + digits(len), 0};
      return equality(text, euclid::distance_sq(point(a[0]), point(a[1])), len * len);
    }
    if (p == "perimeter_is") {
      Point x = point(a[0]), y = point(a[1]), z = point(a[2]);
      ExactReal sum = ExactReal::sqrt(euclid::distance_sq(x, y)) + ExactReal::sqrt(euclid::distance_sq(y, z)) +
                      ExactReal::sqrt(euclid::distance_sq(z, x));
      return equality(text, sum, scalar(a[3]));
    }
    if (p == "on_line") {
      ExactReal v = line(a[1]).evaluate(point(a[0]));
      return {text, v.sign() == 0, "residual=" + digits(v), 0};
    }
    if (p == "on_circle") {
      ExactReal v = circle(a[1]).evaluate(point(a[0]));
      return {text, v.sign() == 0, "residual=" + digits(v), 0};
    }
    if (p == "parallel" || p == "perpendicular") {
      Line l = line(a[0]), m = line(a[1]);
      ExactReal v = p == "parallel" ? l.a() * m.b() - m.a() * l.b() : l.a() * m.a() + l.b() * m.b();
      return {text, v.sign() == 0, (p == "parallel" ? "cross=" : "dot=") + digits(v), 0};
    }
    if (p == "collinear") {
      Point x = point(a[0]), y = point(a[1]), z = point(a[2]);
      ExactReal v = euclid::cross(y - x, z - x);
      return {text, v.sign() == 0, "cross=" + digits(v), 0};
    }
    if (p == "between") {
      Point x = point(a[0]), y = point(a[1]), z = point(a[2]);
      ExactReal v = euclid::cross(y - x, z - x);
      ExactReal t = euclid::dot(y - x, z - x);
      ExactReal len = euclid::dot(z - x, z - x);
      bool pass = euclid::between(x, y, z);
      return {text, pass, "cross=" + digits(v) + " t=" + digits(t) + " len=" + digits(len), 0};
    }
    if (p == "equal_point") {
      Point x = point(a[0]), y = point(a[1]);
      return {text, x == y, "dist_sq=" + digits(euclid::distance_sq(x, y)), 0};
    }
    throw exactnum::InternalError("unhandled predicate " + p);
  }

  const Program& program_;
  Env env_;
};

bool has_type(const GeomObject& obj, ValueType type) {
  switch (type) {
    case ValueType::Point:
      return std::holds_alternative<Point>(obj);
    case ValueType::Line:
      return std::holds_alternative<Line>(obj);
    case ValueType::Circle:
      return std::holds_alternative<Circle>(obj);
    case ValueType::Length:
    case ValueType::Ratio:
      return std::holds_alternative<ExactReal>(obj);
  }
  return false;
}

GeomObject from_default(const Param& p) {
  const auto& v = *p.default_value;
  switch (p.type) {
    case ValueType::Point:
      return Point{v[0], v[1]};
    case ValueType::Line:
      return Line(v[0], v[1], v[2]);
    case ValueType::Circle:
      if (v[2] < 0) throw exactnum::DomainError("default circle of param '" + p.name + "' has negative radius");
      return Circle{Point{v[0], v[1]}, v[2]};
    case ValueType::Length:
    case ValueType::Ratio:
      return ExactReal(v[0]);
  }
  throw exactnum::InternalError("bad param type");
}

}  // namespace

bool Trace::all_pass() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

const TraceEntry* Trace::find(const std::string& name) const {
  for (const auto& e : inputs)
    if (e.name == name) return &e;
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::size_t Trace::constructed_circles() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += std::holds_alternative<Circle>(e.object);
  return n;
}

ExecutionError::ExecutionError(std::size_t statement, int line, const std::string& message)
    : SketchError("statement " + std::to_string(statement) + " (line " + std::to_string(line) + "): " + message),
      statement_(statement),
      line_(line) {}

Bindings resolve_params(const Program& program, const Bindings& bindings) {
  for (const auto& [name, obj] : bindings)
    if (!program.find_param(name)) throw MissingParam("'" + name + "' is not a parameter of this script");
  Bindings out;
  for (const Param& p : program.params) {
    auto it = bindings.find(p.name);
    if (it != bindings.end()) {
      if (!has_type(it->second, p.type))
        throw MissingParam("parameter '" + p.name + "' expects a " + to_string(p.type));
      out.emplace(p.name, it->second);
    } else if (p.default_value) {
      out.emplace(p.name, from_default(p));
    } else {
      throw MissingParam("no value for parameter '" + p.name + "'");
    }
  }
  return out;
}

Trace execute(const Program& program, const Bindings& bindings) {
  Bindings resolved = resolve_params(program, bindings);
  Env env;
  for (const Param& p : program.params) env.emplace(p.name, Value{resolved.at(p.name), p.type});
  return Runner(program, std::move(env)).run();
}

Bindings scale_bindings(const Program& program, const Bindings& bindings, const BigRational& factor) {
  Bindings resolved = resolve_params(program, bindings);
  ExactReal k(factor);
  Bindings out;
  for (const Param& p : program.params) {
    const GeomObject& obj = resolved.at(p.name);
    switch (p.type) {
      case ValueType::Point: {
        const auto& pt = std::get<Point>(obj);
        out.emplace(p.name, Point{k * pt.x, k * pt.y});
        break;
      }
      case ValueType::Line: {
        const auto& l = std::get<Line>(obj);
        out.emplace(p.name, Line(l.a(), l.b(), k * l.c()));
        break;
      }
      case ValueType::Circle: {
        const auto& c = std::get<Circle>(obj);
        out.emplace(p.name, Circle{Point{k * c.center.x, k * c.center.y}, k * k * c.radius_sq});
        break;
      }
      case ValueType::Length:
        out.emplace(p.name, k * std::get<ExactReal>(obj));
        break;
      case ValueType::Ratio:
        out.emplace(p.name, obj);
        break;
    }
  }
  return out;
}

std::string describe(const GeomObject& object, int n) {
  std::ostringstream out;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Point>) {
          out << "(" << o.x.decimal(n) << ", " << o.y.decimal(n) << ")";
        } else if constexpr (std::is_same_v<T, Line>) {
          out << o.a().decimal(n) << "x + " << o.b().decimal(n) << "y + " << o.c().decimal(n) << " = 0";
        } else if constexpr (std::is_same_v<T, Circle>) {
          out << "center (" << o.center.x.decimal(n) << ", " << o.center.y.decimal(n)
              << ") r^2 " << o.radius_sq.decimal(n);
        } else {
          out << o.decimal(n);
        }
      },
      object);
  return out.str();
}

}  // namespace coffin::sketch
