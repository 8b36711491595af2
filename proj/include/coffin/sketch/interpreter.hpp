#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "coffin/euclid/plane.hpp"
#include "coffin/sketch/program.hpp"

namespace coffin::sketch {

using euclid::Circle;
using euclid::Line;
using euclid::Point;
using exactnum::ExactReal;

/// Lengths and ratios are both carried as ExactReal.
using GeomObject = std::variant<Point, Line, Circle, ExactReal>;
using Bindings = std::map<std::string, GeomObject>;

struct TraceEntry {
  std::string name;
  GeomObject object;
  ValueType type = ValueType::Point;
  /// Index into Program::statements; inputs use the param index instead.
  std::size_t statement = 0;
  std::string primitive;  // "param" for inputs
};

struct AssertionReport {
  std::string text;
  bool pass = false;
  std::string witness;
  std::size_t statement = 0;
};

struct Trace {
  Tools tools = Tools::CompassAndStraightedge;
  std::vector<TraceEntry> inputs;
  std::vector<TraceEntry> entries;
  std::vector<AssertionReport> assertions;

  bool all_pass() const;
  const TraceEntry* find(const std::string& name) const;
  /// Number of constructed (non-input) circles.
  std::size_t constructed_circles() const;
};

class MissingParam : public SketchError {
 public:
  using SketchError::SketchError;
};

/// A geometric or domain failure while executing one statement.
class ExecutionError : public SketchError {
 public:
  ExecutionError(std::size_t statement, int line, const std::string& message);
  std::size_t statement() const { return statement_; }
  int line() const { return line_; }

 private:
  std::size_t statement_;
  int line_;
};

/// Runs the program with the given parameter values (defaults fill the rest).
/// Assertions never throw; their outcome is recorded in the trace.
Trace execute(const Program& program, const Bindings& bindings = {});

/// Parameter values including defaults, checked against declared types.
Bindings resolve_params(const Program& program, const Bindings& bindings);

/// Scales every length-carrying parameter about the origin by `factor`
/// (points, lines, circles, lengths); ratios are unchanged.
Bindings scale_bindings(const Program& program, const Bindings& bindings, const BigRational& factor);

std::string describe(const GeomObject& object, int digits = 12);

}  // namespace coffin::sketch
