#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coffin/exactnum/rational.hpp"

namespace coffin::sketch {

using exactnum::BigRational;

enum class Tools { CompassAndStraightedge, StraightedgeOnly };

/// Static type of a named value. Lengths scale with the figure, ratios do
/// not.
enum class ValueType { Point, Line, Circle, Length, Ratio };

std::string to_string(Tools tools);
std::string to_string(ValueType type);

class SketchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public SketchError {
 public:
  SyntaxError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Static errors carry the source line of the offending statement.
class StaticError : public SketchError {
 public:
  StaticError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownIdentifier : public StaticError {
 public:
  using StaticError::StaticError;
};
class ArityMismatch : public StaticError {
 public:
  using StaticError::StaticError;
};
class TypeMismatch : public StaticError {
 public:
  using StaticError::StaticError;
};
class DuplicateBinding : public StaticError {
 public:
  using StaticError::StaticError;
};
class ToolViolation : public StaticError {
 public:
  using StaticError::StaticError;
};

/// Argument expression: a name, a rational literal, or a call such as
/// `other(P)` inside a selector position.
struct Expr {
  enum class Kind { Name, Number, Call };
  Kind kind = Kind::Name;
  std::string name;
  BigRational number;
  std::vector<Expr> args;
  int line = 0;
  int col = 0;

  std::string to_string() const;
};

struct Param {
  std::string name;
  ValueType type = ValueType::Point;
  /// Point: (x, y). Line: (a, b, c). Circle: (cx, cy, r²). Length/ratio: one value.
  std::optional<std::vector<BigRational>> default_value;
  int line = 0;
};

struct Statement {
  enum class Kind { Bind, Assert };
  Kind kind = Kind::Bind;
  std::string name;  // bound name; empty for assertions
  std::string callee;
  std::vector<Expr> args;
  ValueType result = ValueType::Point;  // for Bind
  int line = 0;

  std::string to_string() const;
};

struct Program {
  Tools tools = Tools::CompassAndStraightedge;
  std::vector<Param> params;
  std::vector<Statement> statements;

  const Param* find_param(const std::string& name) const;
};

/// Parses and statically checks a script: names bound before use and never
/// rebound, primitive arity and argument types, and tool legality.
Program parse(const std::string& text);

/// Primitives that need a compass.
bool requires_compass(const std::string& primitive);

}  // namespace coffin::sketch
