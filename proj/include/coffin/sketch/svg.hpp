#pragma once

#include <string>

#include "coffin/sketch/interpreter.hpp"

namespace coffin::sketch {

struct Viewport {
  BigRational xmin;
  BigRational ymin;
  BigRational xmax;
  BigRational ymax;
};

class RenderError : public SketchError {
 public:
  using SketchError::SketchError;
};

/// Bounding box of all points and circles in the trace, widened by 15% on
/// each side and rounded outward to multiples of 1/8.
Viewport auto_viewport(const Trace& trace);

/// SVG 1.1 document. Inputs are drawn black, constructed objects blue;
/// points get labeled dots, lines are clipped to the viewport. Coordinates
/// carry 12 significant digits. Throws RenderError for an empty trace or a
/// zero-area viewport.
std::string render_svg(const Trace& trace, const Viewport& viewport);

}  // namespace coffin::sketch
