#include "coffin/sketch/svg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace coffin::sketch {

namespace {

constexpr int kDigits = 12;

std::string num(const ExactReal& v) { return v.decimal(kDigits); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '\'':
        out += "&apos;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(const Viewport& v) : v_(v) {}

  ExactReal sx(const ExactReal& x) const { return x - ExactReal(v_.xmin); }
  ExactReal sy(const ExactReal& y) const { return ExactReal(v_.ymax) - y; }

  bool inside(const Point& p) const {
    return compare(p.x, ExactReal(v_.xmin)) >= 0 && compare(p.x, ExactReal(v_.xmax)) <= 0 &&
           compare(p.y, ExactReal(v_.ymin)) >= 0 && compare(p.y, ExactReal(v_.ymax)) <= 0;
  }

  // Exact endpoints of the part of `l` inside the viewport.
  std::optional<std::pair<Point, Point>> clip(const Line& l) const {
    std::vector<Point> hits;
    auto add = [&](Point p) {
      if (!inside(p)) return;
      for (const auto& h : hits)
        if (h == p) return;
      hits.push_back(std::move(p));
    };
    if (l.b().sign() != 0) {
      for (const BigRational& x : {v_.xmin, v_.xmax}) add(Point{ExactReal(x), -(l.a() * ExactReal(x) + l.c()) / l.b()});
    }
    if (l.a().sign() != 0) {
      for (const BigRational& y : {v_.ymin, v_.ymax}) add(Point{-(l.b() * ExactReal(y) + l.c()) / l.a(), ExactReal(y)});
    }
    if (hits.size() < 2) return std::nullopt;
    auto less = [](const Point& p, const Point& q) { return euclid::lex_compare(p, q) < 0; };
    auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), less);
    return std::make_pair(*lo, *hi);
  }

 private:
  Viewport v_;
};

BigRational round_down(const BigRational& q) { return BigRational(exactnum::floor(q * 8), 8); }
BigRational round_up(const BigRational& q) { return BigRational(exactnum::ceil(q * 8), 8); }

}  // namespace

Viewport auto_viewport(const Trace& trace) {
  std::optional<Viewport> box;
  auto extend = [&](const ExactReal& x, const ExactReal& y, const ExactReal& pad) {
    BigRational tiny(1, exactnum::BigInt(1) << 20);
    auto xi = (x - pad).refine(tiny), xa = (x + pad).refine(tiny);
    auto yi = (y - pad).refine(tiny), ya = (y + pad).refine(tiny);
    if (!box) {
      box = Viewport{xi.lo, yi.lo, xa.hi, ya.hi};
      return;
    }
    box->xmin = std::min(box->xmin, xi.lo);
    box->ymin = std::min(box->ymin, yi.lo);
    box->xmax = std::max(box->xmax, xa.hi);
    box->ymax = std::max(box->ymax, ya.hi);
  };
  auto visit = [&](const TraceEntry& e) {
    if (const auto* p = std::get_if<Point>(&e.object)) extend(p->x, p->y, ExactReal(0));
    if (const auto* c = std::get_if<Circle>(&e.object))
      extend(c->center.x, c->center.y, ExactReal::sqrt(c->radius_sq));
  };
  for (const auto& e : trace.inputs) visit(e);
  for (const auto& e : trace.entries) visit(e);
  if (!box) throw RenderError("EmptyTrace: nothing to bound");
  BigRational w = box->xmax - box->xmin, h = box->ymax - box->ymin;
  BigRational pad = std::max(std::max(w, h) * BigRational(3, 20), BigRational(1));
  return {round_down(box->xmin - pad), round_down(box->ymin - pad), round_up(box->xmax + pad),
          round_up(box->ymax + pad)};
}

std::string render_svg(const Trace& trace, const Viewport& viewport) {
  if (trace.inputs.empty() && trace.entries.empty()) throw RenderError("EmptyTrace: trace has no objects");
  if (viewport.xmax <= viewport.xmin || viewport.ymax <= viewport.ymin)
    throw RenderError("EmptyTrace: viewport has zero area");

  Canvas canvas(viewport);
  BigRational width = viewport.xmax - viewport.xmin, height = viewport.ymax - viewport.ymin;
  BigRational scale = std::max(width, height);
  std::string stroke = exactnum::to_significant(scale / 400, kDigits);
  std::string dot = exactnum::to_significant(scale / 150, kDigits);
  std::string font = exactnum::to_significant(scale / 35, kDigits);
  std::string offset = exactnum::to_significant(scale / 100, kDigits);

  std::ostringstream lines, circles, points;
  auto draw = [&](const TraceEntry& e, bool input) {
    const char* color = input ? "#000000" : "#1f4e9c";
    if (const auto* l = std::get_if<Line>(&e.object)) {
      auto seg = canvas.clip(*l);
      if (!seg) return;
      lines << "  <line id=\"" << escape(e.name) << "\" x1=\"" << num(canvas.sx(seg->first.x)) << "\" y1=\""
            << num(canvas.sy(seg->first.y)) << "\" x2=\"" << num(canvas.sx(seg->second.x)) << "\" y2=\""
            << num(canvas.sy(seg->second.y)) << "\" stroke=\"" << color << "\" stroke-width=\"" << stroke
            << "\"/>\n";
    } else if (const auto* c = std::get_if<Circle>(&e.object)) {
      circles << "  <circle id=\"" << escape(e.name) << "\" cx=\"" << num(canvas.sx(c->center.x)) << "\" cy=\""
              << num(canvas.sy(c->center.y)) << "\" r=\"" << num(ExactReal::sqrt(c->radius_sq))
              << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke << "\"/>\n";
    } else if (const auto* p = std::get_if<Point>(&e.object)) {
      if (!canvas.inside(*p)) return;
      ExactReal x = canvas.sx(p->x), y = canvas.sy(p->y);
      points << "  <circle class=\"dot\" id=\"" << escape(e.name) << "\" cx=\"" << num(x) << "\" cy=\"" << num(y)
             << "\" r=\"" << dot << "\" fill=\"" << color << "\"/>\n";
      points << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" dx=\"" << offset << "\" dy=\"-" << offset
             << "\" font-size=\"" << font << "\" font-family=\"sans-serif\" fill=\"" << color << "\">"
             << escape(e.name) << "</text>\n";
    }
  };
  for (const auto& e : trace.inputs) draw(e, true);
  for (const auto& e : trace.entries) draw(e, false);

  std::ostringstream doc;
  doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
      << exactnum::to_significant(width, kDigits) << " " << exactnum::to_significant(height, kDigits)
      << "\" width=\"600\" height=\"" << exactnum::to_significant(BigRational(600) * height / width, kDigits)
      << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << exactnum::to_significant(width, kDigits) << "\" height=\""
      << exactnum::to_significant(height, kDigits) << "\" fill=\"#ffffff\"/>\n"
      << lines.str() << circles.str() << points.str() << "</svg>\n";
  return doc.str();
}

}  // namespace coffin::sketch
