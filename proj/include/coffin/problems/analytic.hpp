#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coffin/problems/report.hpp"

namespace coffin::problems {

enum class P07Function { Constant5, Linear, Sine, Quadratic };

std::string to_string(P07Function f);

struct P07Classification {
  bool violation = false;
  /// Witness pair with F(x1) − F(x2) > (x1 − x2)², set when `violation`.
  double x1 = 0;
  double x2 = 0;
  double lhs = 0;
  double rhs = 0;
};

/// Tests F(x1) − F(x2) ≤ (x1 − x2)² on every pair; throws on an empty grid.
P07Classification p07_probe(P07Function f, const std::vector<std::pair<double, double>>& grid);
/// All ordered pairs of a 0.05-spaced grid on [−2, 2] plus pairs near 0.
std::vector<std::pair<double, double>> p07_default_grid();
VerificationReport verify_p07(std::uint64_t seed);

enum class P71Function { Identity, Cube, Exp };

std::string to_string(P71Function f);

class LevelsNotAttained : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct P71Result {
  /// Where f reaches the mid level (y1 + y2)/2.
  double x_star = 0;
  /// Grid point of least area.
  double grid_minimizer = 0;
  double min_area = 0;
  /// Crossings of the two levels.
  double x_low = 0;
  double x_high = 0;
};

/// Area between the graph and the two levels cut at x, minimized over a
/// 10⁴-point grid. Throws LevelsNotAttained when y1 ≥ y2 or a level lies
/// outside the function's range on its domain.
P71Result p71_probe(P71Function f, double y1, double y2);
/// Area for the cut at `x` (adaptive Simpson, tolerance 1e-10).
double p71_area(P71Function f, double y1, double y2, double x);
VerificationReport verify_p71(std::uint64_t seed);

}  // namespace coffin::problems
