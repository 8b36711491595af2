#include "coffin/problems/analytic.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace coffin::problems {

namespace {

double eval07(P07Function f, double x) {
  switch (f) {
    case P07Function::Constant5:
      return 5.0;
    case P07Function::Linear:
      return x;
    case P07Function::Sine:
      return std::sin(x);
    case P07Function::Quadratic:
      return x * x;
  }
  return 0.0;
}

struct Monotone {
  std::function<double(double)> f;
  double lo;
  double hi;
};

Monotone catalog71(P71Function f) {
  switch (f) {
    case P71Function::Identity:
      return {[](double x) { return x; }, -10, 10};
    case P71Function::Cube:
      return {[](double x) { return x * x * x; }, -2, 2};
    case P71Function::Exp:
      return {[](double x) { return std::exp(x); }, -5, 5};
  }
  throw std::invalid_argument("unknown catalog function");
}

double inverse(const Monotone& m, double level) {
  if (!(m.f(m.lo) <= level && level <= m.f(m.hi))) throw LevelsNotAttained("level not attained on the domain");
  double lo = m.lo, hi = m.hi;
  for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
    const double mid = (lo + hi) / 2;
    (m.f(mid) < level ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

double adaptive(const std::function<double(double)>& g, double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
  const double m = (a + b) / 2;
  const double lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = g(lm), frm = g(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
  return adaptive(g, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive(g, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = g(a), fb = g(b), fm = g((a + b) / 2);
  return adaptive(g, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 50);
}

}  // namespace

std::string to_string(P07Function f) {
  switch (f) {
    case P07Function::Constant5:
      return "F=5";
    case P07Function::Linear:
      return "F=x";
    case P07Function::Sine:
      return "F=sin x";
    case P07Function::Quadratic:
      return "F=x^2";
  }
  return "F=?";
}

std::string to_string(P71Function f) {
  switch (f) {
    case P71Function::Identity:
      return "f=x";
    case P71Function::Cube:
      return "f=x^3";
    case P71Function::Exp:
      return "f=e^x";
  }
  return "f=?";
}

P07Classification p07_probe(P07Function f, const std::vector<std::pair<double, double>>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty pair grid");
  P07Classification out;
  for (const auto& [x1, x2] : grid) {
    const double lhs = eval07(f, x1) - eval07(f, x2);
    const double rhs = (x1 - x2) * (x1 - x2);
    if (lhs > rhs + tolerance::kEvaluation) {
      return {true, x1, x2, lhs, rhs};
    }
  }
  return out;
}

std::vector<std::pair<double, double>> p07_default_grid() {
  std::vector<std::pair<double, double>> grid{{0.5, 0.0}, {0.1, 0.0}};
  for (int i = -40; i <= 40; ++i) {
    for (int j = -40; j <= 40; ++j) {
      if (i != j) grid.emplace_back(0.05 * i, 0.05 * j);
    }
  }
  return grid;
}

VerificationReport verify_p07(std::uint64_t seed) {
  ReportBuilder b("p07", seed);
  const auto grid = p07_default_grid();
  for (auto f : {P07Function::Constant5, P07Function::Linear, P07Function::Sine, P07Function::Quadratic}) {
    const auto c = p07_probe(f, grid);
    const bool expect_violation = f != P07Function::Constant5;
    const std::string witness = c.violation ? "F(" + fmt(c.x1) + ")-F(" + fmt(c.x2) + ")=" + fmt(c.lhs) +
                                                  " > " + fmt(c.rhs)
                                            : "no violation on " + std::to_string(grid.size()) + " pairs";
    b.numeric(to_string(f) + (expect_violation ? " violates the inequality" : " satisfies the inequality"),
              c.violation == expect_violation, witness);
  }
  const auto linear = p07_probe(P07Function::Linear, {{0.5, 0.0}});
  b.numeric("F=x at (0.5, 0): 0.5 > 0.25", linear.violation && linear.lhs == 0.5 && linear.rhs == 0.25,
            fmt(linear.lhs) + " > " + fmt(linear.rhs));
  const auto sine = p07_probe(P07Function::Sine, {{0.1, 0.0}});
  b.numeric("F=sin x at (0.1, 0): sin 0.1 > 0.01", sine.violation, fmt(sine.lhs) + " > " + fmt(sine.rhs));
  b.headline("only constants survive");
  return b.finish();
}

double p71_area(P71Function f, double y1, double y2, double x) {
  const Monotone m = catalog71(f);
  const double a = inverse(m, y1);
  const double c = inverse(m, y2);
  const double tol = tolerance::kQuadrature;
  const double below = integrate([&](double u) { return m.f(u) - y1; }, a, x, tol);
  const double above = integrate([&](double u) { return y2 - m.f(u); }, x, c, tol);
  return below + above;
}

P71Result p71_probe(P71Function f, double y1, double y2) {
  if (!(y1 < y2)) throw LevelsNotAttained("levels must satisfy y1 < y2");
  const Monotone m = catalog71(f);
  P71Result out;
  out.x_low = inverse(m, y1);
  out.x_high = inverse(m, y2);
  out.x_star = inverse(m, (y1 + y2) / 2);
  const int points = 10000;
  out.min_area = INFINITY;
  for (int k = 0; k <= points; ++k) {
    const double x = out.x_low + (out.x_high - out.x_low) * k / points;
    const double area = p71_area(f, y1, y2, x);
    if (area < out.min_area) {
      out.min_area = area;
      out.grid_minimizer = x;
    }
  }
  return out;
}

VerificationReport verify_p71(std::uint64_t seed) {
  ReportBuilder b("p71", seed);
  struct Case {
    P71Function f;
    double y1, y2, expected;
    const char* label;
  };
  const Case cases[] = {{P71Function::Identity, 0, 1, 0.5, "1/2"},
                        {P71Function::Cube, -1, 1, 0.0, "0"},
                        {P71Function::Exp, 1, 3, std::log(2.0), "ln 2"}};
  for (const auto& c : cases) {
    const auto r = p71_probe(c.f, c.y1, c.y2);
    const std::string name = to_string(c.f) + " between " + fmt(c.y1) + " and " + fmt(c.y2);
    b.numeric(name + ": mid-level crossing at " + c.label, std::abs(r.x_star - c.expected) < tolerance::kEvaluation,
              "x*=" + fmt(r.x_star));
    b.numeric(name + ": grid minimizer within 1e-4 of x*",
              std::abs(r.grid_minimizer - r.x_star) <= tolerance::kMinimizer,
              "argmin=" + fmt(r.grid_minimizer) + " area=" + fmt(r.min_area));
  }
  b.headline("minimizer at the mid-level crossing");
  return b.finish();
}

}  // namespace coffin::problems
