#include "coffin/problems/algebraic.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "coffin/exactnum/int_polynomial.hpp"
#include "coffin/exactnum/multi_polynomial.hpp"
#include "coffin/exactnum/power_comparison.hpp"

namespace coffin::problems {

using exactnum::IntPolynomial;
using exactnum::MultiPolynomial;
using exactnum::ZOmega;
using Dec50 = boost::multiprecision::cpp_dec_float_50;

namespace {

std::string str(const BigRational& q) { return exactnum::to_string(q); }
std::string str(const BigInt& n) { return n.str(); }

std::string sci(const Dec50& v) {
  std::ostringstream out;
  out.precision(6);
  out << std::scientific << v;
  return out.str();
}

const char* ordering_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "Less";
  if (o == std::strong_ordering::greater) return "Greater";
  return "Equal";
}

Dec50 pi50() { return boost::math::constants::pi<Dec50>(); }

// Original inequality of problem 1 at rational x in [0, 1].
bool p01_holds(const BigRational& x) {
  ExactReal xr(x);
  ExactReal up = ExactReal::sqrt(ExactReal(1) + xr);
  ExactReal down = ExactReal::sqrt(ExactReal(1) - xr);
  ExactReal lhs = xr * (ExactReal(8) * down + up);
  ExactReal rhs = ExactReal(11) * up - ExactReal(16) * down;
  return lhs <= rhs;
}

ExactInterval p01_checks(ReportBuilder& b) {
  const IntPolynomial one_plus_sq{1, 0, 1};
  const IntPolynomial one_minus_sq{1, 0, -1};
  const IntPolynomial difference = one_plus_sq * IntPolynomial{11, -16} - one_minus_sq * IntPolynomial{1, 8};
  const IntPolynomial quadratic{-10, 4, -4};
  const IntPolynomial factored = IntPolynomial{-1, 2} * quadratic;
  b.exact("(1+y^2)(11-16y) - (1-y^2)(8y+1) = (2y-1)(-4y^2+4y-10)", difference == factored,
          "expanded: " + difference.to_string("y"));

  const BigRational bound = exactnum::coeff_bound(IntPolynomial{0, 4, -4}, 1);
  b.exact("-4y^2+4y-10 < 0 on [0,1]", bound < 10, "|-4y^2+4y| <= " + str(bound) + " < 10");
  // Discriminant 16 - 160 < 0 with negative leading coefficient.
  const BigInt disc = quadratic.coefficient(1) * quadratic.coefficient(1) -
                      4 * quadratic.coefficient(2) * quadratic.coefficient(0);
  b.exact("-4y^2+4y-10 has no real root", disc < 0, "discriminant=" + str(disc));

  // y = sqrt((1-x)/(1+x)) = 1/2 exactly at x = 3/5.
  const BigRational x0(3, 5);
  const BigRational y0sq = (1 - x0) / (1 + x0);
  b.exact("y(3/5) = 1/2", y0sq == BigRational(1, 4), "y^2=" + str(y0sq));
  {
    ExactReal xr(x0);
    ExactReal up = ExactReal::sqrt(ExactReal(1) + xr);
    ExactReal down = ExactReal::sqrt(ExactReal(1) - xr);
    ExactReal lhs = xr * (ExactReal(8) * down + up);
    ExactReal rhs = ExactReal(11) * up - ExactReal(16) * down;
    b.exact("equality at x = 3/5", lhs == rhs, "lhs=rhs=" + lhs.decimal(15));
  }
  b.exact("inequality holds at x = 1", p01_holds(1), "lhs=sqrt(2) rhs=11*sqrt(2)");
  b.exact("inequality fails at x = 0", !p01_holds(0), "lhs=0 rhs=-5");

  int agree = 0;
  const int samples = 40;
  for (int k = 1; k <= samples; ++k) {
    const BigRational x(k, samples);
    if (p01_holds(x) == (x >= x0)) ++agree;
  }
  b.exact("x = k/40 satisfies the inequality iff x >= 3/5", agree == samples,
          std::to_string(agree) + "/" + std::to_string(samples) + " samples agree");

  return ExactInterval{ExactReal(x0), ExactReal(1), true, true};
}

std::vector<ExactReal> p12_checks(ReportBuilder& b) {
  const IntPolynomial cubic{1, -2, 0, 1};
  const auto rational = exactnum::rational_roots(cubic);
  b.exact("rational roots of y^3-2y+1 are {1}", rational.size() == 1 && rational[0] == 1,
          std::to_string(rational.size()) + " rational root(s)");
  const IntPolynomial quadratic{-1, 1, 1};
  b.exact("y^3-2y+1 = (y-1)(y^2+y-1)", IntPolynomial{-1, 1} * quadratic == cubic, "exact expansion");
  b.exact("y^2+y-1 has irrational roots", !exactnum::exact_sqrt(BigInt(5)).has_value(), "discriminant=5");

  const ExactReal s5 = ExactReal::sqrt(ExactReal(5));
  std::vector<ExactReal> roots{(ExactReal(-1) - s5) / 2, (ExactReal(-1) + s5) / 2, ExactReal(1)};

  for (const auto& y : roots) {
    const ExactReal lhs = square(y * y * y + 1) * (y * y * y + 1);
    const ExactReal rhs = ExactReal(8) * (ExactReal(2) * y - 1);
    b.exact("(y^3+1)^3 = 8(2y-1) at y = " + y.expression(), lhs == rhs, "both=" + lhs.decimal(15));
    const double yd = y.approx();
    const double residual = std::abs(2 * std::cbrt(2 * yd - 1) - (yd * yd * yd + 1));
    b.numeric("2*cbrt(2y-1) = y^3+1 at y = " + y.decimal(15), residual < tolerance::kEvaluation,
              "residual=" + fmt(residual));
  }
  const ExactReal e1 = roots[0] + roots[1] + roots[2];
  const ExactReal e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
  const ExactReal e3 = roots[0] * roots[1] * roots[2];
  // (y-r1)(y-r2)(y-r3) = y^3 - e1 y^2 + e2 y - e3
  b.exact("(y-r1)(y-r2)(y-r3) = y^3-2y+1", e1 == ExactReal(0) && e2 == ExactReal(-2) && e3 == ExactReal(-1),
          "e1=" + e1.decimal(15) + " e2=" + e2.decimal(15) + " e3=" + e3.decimal(15));
  const bool zero_rejected = IntPolynomial{1, 0, 0, 1}(BigRational(0)) != 8 * (2 * BigRational(0) - 1);
  b.exact("y = 0 is not a solution", zero_rejected, "1 != -8");
  return roots;
}

Dec50 p17_difference(const Dec50& x) {
  const Dec50 s = sin(x);
  const Dec50 c = cos(x);
  return pow(s, 7) + 1 / pow(s, 3) - pow(c, 7) - 1 / pow(c, 3);
}

P17Solutions p17_checks(ReportBuilder& b) {
  P17Solutions out;
  out.description = "x = pi/4 + k*pi";

  const ExactReal root2 = ExactReal::sqrt(ExactReal(2));
  bool residue = true;
  for (int sgn : {1, -1}) {
    const ExactReal s = ExactReal(sgn) * root2 / 2;
    const ExactReal c = ExactReal(sgn) / root2;
    const ExactReal lhs = square(square(s)) * square(s) * s + ExactReal(1) / (square(s) * s);
    const ExactReal rhs = square(square(c)) * square(c) * c + ExactReal(1) / (square(c) * c);
    residue = residue && square(s) + square(c) == ExactReal(1) && lhs == rhs;
  }
  out.residue_exact = residue;
  b.exact("sin x = cos x = +-sqrt(2)/2 solves the equation", residue, "both sides equal exactly");

  const IntPolynomial t = IntPolynomial{0, 1};
  const IntPolynomial reduced{1, 1, -2, -1};
  const IntPolynomial lhs_form = IntPolynomial{1, 0, -3} + t * IntPolynomial{1, 0, -2} + IntPolynomial{0, 0, 1, 1};
  b.exact("1-3t^2+t(1-2t^2)+t^2+t^3 = 1+t-2t^2-t^3", lhs_form == reduced, reduced.to_string("t"));
  const IntPolynomial sextic{-1, -1, 0, 1, 1, -2, -1};
  b.exact("t^3(1+t-2t^2-t^3) - (1+t) = -t^6-2t^5+t^4+t^3-t-1",
          IntPolynomial::monomial(1, 3) * reduced - IntPolynomial{1, 1} == sextic, sextic.to_string("t"));

  out.bound = exactnum::coeff_bound(sextic - IntPolynomial{-1}, BigRational(1, 2));
  b.exact("coeff_bound(-t^6-2t^5+t^4+t^3-t, 1/2) = 49/64 < 1", out.bound == BigRational(49, 64) && out.bound < 1,
          "bound=" + str(out.bound));

  const Dec50 pi = pi50();
  out.residual_pi4 = static_cast<double>(abs(p17_difference(pi / 4)));
  out.residual_pi3 = static_cast<double>(abs(p17_difference(pi / 3)));
  b.numeric("x = pi/4 balances the equation", out.residual_pi4 < tolerance::kEvaluation,
            "residual=" + fmt(out.residual_pi4));
  b.numeric("x = pi/3 does not", out.residual_pi3 > tolerance::kEvaluation, "residual=" + fmt(out.residual_pi3));

  // Sign changes of LHS-RHS away from the poles of sin and cos occur only at pi/4 + k*pi.
  const double half_turn = std::acos(-1.0);
  const int steps = 20000;
  const double h = 2 * half_turn / steps;
  auto f = [](double x) {
    const double s = std::sin(x), c = std::cos(x);
    return std::pow(s, 7) + 1 / std::pow(s, 3) - std::pow(c, 7) - 1 / std::pow(c, 3);
  };
  auto near_pole = [half_turn](double x) {
    const double m = std::fmod(x, half_turn / 2);
    return std::min(m, half_turn / 2 - m) < 1e-3;
  };
  int found = 0;
  int stray = 0;
  for (int k = 0; k < steps; ++k) {
    const double x0 = h * k + 1e-7;
    const double x1 = x0 + h;
    if (near_pole(x0) || near_pole(x1)) continue;
    if ((f(x0) < 0) == (f(x1) < 0)) continue;
    const double r = std::fmod(x0 - half_turn / 4 + 2 * half_turn, half_turn);
    if (std::min(r, half_turn - r) < 2 * h) {
      ++found;
    } else {
      ++stray;
    }
  }
  b.numeric("sign changes on [0, 2pi) only at pi/4 and 5pi/4", found == 2 && stray == 0,
            "roots=" + std::to_string(found) + " stray=" + std::to_string(stray));
  return out;
}

void p38_checks(ReportBuilder& b) {
  const IntPolynomial p{1, -3, 0, 1};
  const auto roots = exactnum::rational_roots(p);
  b.exact("x^3-3x+1 has no rational root", roots.empty(), std::to_string(roots.size()) + " rational roots");
  b.exact("p(1) = -1", p(BigRational(1)) == -1, "p(1)=" + str(p(BigRational(1))));
  b.exact("p(-1) = 3", p(BigRational(-1)) == 3, "p(-1)=" + str(p(BigRational(-1))));

  const Dec50 s10 = sin(pi50() / 18);
  const Dec50 triple = 3 * s10 - 4 * s10 * s10 * s10;
  b.numeric("3 sin 10 - 4 sin^3 10 = 1/2 (50 digits)", abs(triple - Dec50(0.5)) < tolerance::kEvaluation,
            "residual=" + sci(abs(triple - Dec50(0.5))));
  const Dec50 x = 2 * s10;
  const Dec50 value = x * x * x - 3 * x + 1;
  b.numeric("|p(2 sin 10)| < 1e-12 (50 digits)", abs(value) < tolerance::kEvaluation, "|p|=" + sci(abs(value)));
}

void p42_checks(ReportBuilder& b) {
  const std::array<std::array<long, 2>, 6> pts{{{25, 0}, {-25, 0}, {7, 24}, {7, -24}, {-7, 24}, {-7, -24}}};
  auto name = [](const std::array<long, 2>& p) {
    return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
  };
  int integral = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const BigInt dx = pts[i][0] - pts[j][0];
      const BigInt dy = pts[i][1] - pts[j][1];
      const BigInt d2 = dx * dx + dy * dy;
      const auto root = exactnum::exact_sqrt(d2);
      if (root) ++integral;
      b.exact("|" + name(pts[i]) + name(pts[j]) + "| is an integer", root.has_value(),
              "d^2=" + str(d2) + (root ? " d=" + str(*root) : ""));
    }
  }
  int triples = 0;
  int collinear = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        ++triples;
        const BigInt c = BigInt(pts[j][0] - pts[i][0]) * (pts[k][1] - pts[i][1]) -
                         BigInt(pts[j][1] - pts[i][1]) * (pts[k][0] - pts[i][0]);
        if (c == 0) ++collinear;
      }
    }
  }
  b.exact("no three points collinear", collinear == 0,
          std::to_string(triples) + " triples, " + std::to_string(collinear) + " collinear");
  b.headline(std::to_string(integral) + " integer distances");
}

bool integer_equilateral(long ax, long ay, long bx, long by, long cx, long cy) {
  const long ab = (ax - bx) * (ax - bx) + (ay - by) * (ay - by);
  const long bc = (bx - cx) * (bx - cx) + (by - cy) * (by - cy);
  const long ca = (cx - ax) * (cx - ax) + (cy - ay) * (cy - ay);
  return ab > 0 && ab == bc && bc == ca;
}

}  // namespace

bool ExactInterval::contains(const ExactReal& x) const {
  const auto lo_cmp = compare(lo, x);
  const auto hi_cmp = compare(x, hi);
  const bool above = lo_closed ? lo_cmp != std::strong_ordering::greater : lo_cmp == std::strong_ordering::less;
  const bool below = hi_closed ? hi_cmp != std::strong_ordering::greater : hi_cmp == std::strong_ordering::less;
  return above && below;
}

ExactInterval p01_certificate() {
  ReportBuilder b("p01", 0);
  ExactInterval result = p01_checks(b);
  if (!b.finish().passed()) throw CertificateFailure("p01 certificate failed");
  return result;
}

VerificationReport verify_p01(std::uint64_t seed) {
  ReportBuilder b("p01", seed);
  p01_checks(b);
  b.headline("x in [3/5, 1]");
  return b.finish();
}

std::vector<ExactReal> p12_roots() {
  ReportBuilder b("p12", 0);
  auto roots = p12_checks(b);
  if (!b.finish().passed()) throw CertificateFailure("p12 certificate failed");
  return roots;
}

VerificationReport verify_p12(std::uint64_t seed) {
  ReportBuilder b("p12", seed);
  p12_checks(b);
  b.headline("y in {1, (-1+sqrt(5))/2, (-1-sqrt(5))/2}");
  return b.finish();
}

P17Solutions p17_solutions() {
  ReportBuilder b("p17", 0);
  auto out = p17_checks(b);
  if (!b.finish().passed()) throw CertificateFailure("p17 certificate failed");
  return out;
}

VerificationReport verify_p17(std::uint64_t seed) {
  ReportBuilder b("p17", seed);
  auto out = p17_checks(b);
  b.headline(out.description + ", bound " + str(out.bound));
  return b.finish();
}

VerificationReport p38_certificate() { return verify_p38(0); }

VerificationReport verify_p38(std::uint64_t seed) {
  ReportBuilder b("p38", seed);
  p38_checks(b);
  b.headline("roots of x^3-3x+1 irrational");
  return b.finish();
}

VerificationReport p42_points() { return verify_p42(0); }

VerificationReport verify_p42(std::uint64_t seed) {
  ReportBuilder b("p42", seed);
  p42_checks(b);
  return b.finish();
}

P45Result p45_search(int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  P45Result out;
  const double half_root3 = std::sqrt(3.0) / 2;
  for (long x1 = -radius; x1 <= radius; ++x1) {
    for (long y1 = -radius; y1 <= radius; ++y1) {
      for (long x2 = -radius; x2 <= radius; ++x2) {
        for (long y2 = -radius; y2 <= radius; ++y2) {
          const long dx = x2 - x1;
          const long dy = y2 - y1;
          if (dx == 0 && dy == 0) continue;
          ++out.pairs;
          // apex = (x1+x2)/2 -+ (dy/2)*sqrt3, (y1+y2)/2 +- (dx/2)*sqrt3
          const long root3_x = -dy;
          const long root3_y = dx;
          if (root3_x == 0 && root3_y == 0) ++out.rational_apexes;
          for (int sgn : {1, -1}) {
            const double ax = 0.5 * static_cast<double>(x1 + x2) - sgn * half_root3 * static_cast<double>(dy);
            const double ay = 0.5 * static_cast<double>(y1 + y2) + sgn * half_root3 * static_cast<double>(dx);
            const long rx = std::lround(ax);
            const long ry = std::lround(ay);
            if (integer_equilateral(x1, y1, x2, y2, rx, ry)) ++out.lattice_triangles;
          }
        }
      }
    }
  }
  return out;
}

VerificationReport verify_p45(std::uint64_t seed) {
  ReportBuilder b("p45", seed);
  const int radius = 20;
  const auto result = p45_search(radius);
  const std::uint64_t side = 2 * radius + 1;
  const std::uint64_t expected_pairs = side * side * (side * side - 1);
  b.exact("every ordered pair of distinct points in [-20,20]^2 checked", result.pairs == expected_pairs,
          "pairs=" + std::to_string(result.pairs));
  b.exact("no apex has zero sqrt(3) part", result.rational_apexes == 0,
          "rational apexes=" + std::to_string(result.rational_apexes));
  b.exact("sqrt(3) is irrational", exactnum::rational_roots(IntPolynomial{-3, 0, 1}).empty(),
          "y^2-3 has no rational root");
  b.exact("no lattice equilateral triangle (integer distance test)", result.lattice_triangles == 0,
          "triangles=" + std::to_string(result.lattice_triangles));
  const ExactReal apex_y = ExactReal::sqrt(ExactReal(3));
  b.exact("apex of (0,0),(2,0) is (1, +-sqrt(3))", square(apex_y) + 1 == ExactReal(4),
          "y=" + apex_y.decimal(15));
  const long ab = 1 * 1 + 0 * 0;
  const long ac = 0 * 0 + 1 * 1;
  const long bc = (1 - 0) * (1 - 0) + (0 - 1) * (0 - 1);
  b.exact("right isosceles (0,0),(1,0),(0,1) is on the grid and rejected as equilateral",
          ab == ac && ab + ac == bc && !integer_equilateral(0, 0, 1, 0, 0, 1), "|AB|^2=|AC|^2=1 |BC|^2=2");
  b.headline("0 equilateral triangles over " + std::to_string(result.pairs) + " pairs");
  return b.finish();
}

VerificationReport p52_certificate() { return verify_p52(0); }

VerificationReport verify_p52(std::uint64_t seed) {
  ReportBuilder b("p52", seed);
  const auto first = exactnum::compare_log(3, 2, 3, 2);
  b.exact("log2(3) > 3/2 since 3^2 > 2^3", first.ordering == std::strong_ordering::greater,
          str(first.lhs) + " > " + str(first.rhs));
  const auto second = exactnum::compare_log(5, 3, 3, 2);
  b.exact("log3(5) < 3/2 since 5^2 < 3^3", second.ordering == std::strong_ordering::less,
          str(second.lhs) + " < " + str(second.rhs));
  const bool greater = first.ordering == std::strong_ordering::greater && second.ordering == std::strong_ordering::less;
  const Dec50 l23 = log(Dec50(3)) / log(Dec50(2));
  const Dec50 l35 = log(Dec50(5)) / log(Dec50(3));
  b.numeric("50-digit logs agree: log2(3) > log3(5)", greater && l23 > l35,
            "log2(3)=" + l23.str(20) + " log3(5)=" + l35.str(20));
  b.headline(std::string("log2(3) ? log3(5): ") + (greater ? "Greater" : ordering_name(first.ordering)));
  return b.finish();
}

VerificationReport p61_digits() { return verify_p61(0); }

VerificationReport verify_p61(std::uint64_t seed) {
  ReportBuilder b("p61", seed);
  const BigInt n = exactnum::pow(BigInt(125), 100);
  const auto digits = exactnum::digit_count(n);
  b.exact("125^100 has 210 digits", digits == 210, "digits=" + std::to_string(digits));
  const BigRational r = exactnum::pow(BigRational(1024, 1000), 30);
  b.exact("1 < (1024/1000)^30 < 10", 1 < r && r < 10, "(1.024)^30=" + exactnum::to_significant(r, 15));
  const BigRational rebuilt = BigRational(exactnum::pow(BigInt(10), 210)) / r;
  b.exact("125^100 = 10^210 / 1.024^30", rebuilt == BigRational(n), "exact rational equality");
  b.exact("2^300 = 1024^30", exactnum::pow(BigInt(2), 300) == exactnum::pow(BigInt(1024), 30), "exact");
  const BigRational x(24, 1000);
  b.exact("x = 0.024 < 1/40", x < BigRational(1, 40), "x=" + str(x));
  b.exact("binomial terms 30x, 435x^2, C(30,3)x^3 below 0.75, 0.27, 0.06",
          30 * x <= BigRational(3, 4) && 435 * x * x <= BigRational(27, 100) &&
              4060 * x * x * x <= BigRational(6, 100),
          "30x=" + exactnum::to_significant(30 * x, 6) + " 435x^2=" + exactnum::to_significant(435 * x * x, 6) +
              " 4060x^3=" + exactnum::to_significant(4060 * x * x * x, 6));
  b.headline("digits=" + std::to_string(digits));
  return b.finish();
}

VerificationReport p65_identity_check() { return verify_p65(0); }

VerificationReport verify_p65(std::uint64_t seed) {
  ReportBuilder b("p65", seed);
  const MultiPolynomial x = MultiPolynomial::x();
  const MultiPolynomial y = MultiPolynomial::y();
  const MultiPolynomial z = MultiPolynomial::z();
  auto conj = [&](int i, int j) { return x + ZOmega::omega_power(i) * y + ZOmega::omega_power(j) * z; };

  std::vector<MultiPolynomial> factors;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != 0 || j != 0) factors.push_back(conj(i, j));
    }
  }
  const MultiPolynomial eight = expand_product(factors);
  const MultiPolynomial cubes = x.pow(3) + y.pow(3) + z.pow(3);
  const MultiPolynomial xyz = x * y * z;
  const MultiPolynomial target = cubes.pow(3) - ZOmega{27, 0} * xyz.pow(3);
  const MultiPolynomial nine = eight * (x + y + z);
  b.exact("(x+y+z) * eight conjugates = (x^3+y^3+z^3)^3 - 27x^3y^3z^3", nine == target,
          std::to_string(nine.terms().size()) + " terms");
  b.exact("eight-factor product has integer coefficients", eight.has_integer_coefficients(),
          std::to_string(eight.terms().size()) + " terms");
  b.exact("coefficient of x^9 is 1", nine.coefficient({9, 0, 0}) == ZOmega{1, 0},
          "c=" + nine.coefficient({9, 0, 0}).to_string());

  const MultiPolynomial pair = conj(1, 2) * conj(2, 1);
  const MultiPolynomial quad = x * x + y * y + z * z - x * y - y * z - x * z;
  b.exact("(x+wy+w^2z)(x+w^2y+wz) = x^2+y^2+z^2-xy-yz-xz", pair == quad, pair.to_string());
  const MultiPolynomial sum_cubes = cubes - ZOmega{3, 0} * xyz;
  b.exact("(x+y+z)(x^2+y^2+z^2-xy-yz-xz) = x^3+y^3+z^3-3xyz", (x + y + z) * quad == sum_cubes,
          sum_cubes.to_string());
  const auto at = ((x + y + z) * quad).evaluate({1, 2, 3});
  b.exact("identity at (1,2,3) gives 18", at == ZOmega{18, 0} && sum_cubes.evaluate({1, 2, 3}) == ZOmega{18, 0},
          "6*3=" + at.to_string());

  // s in slot x, u = cube root of t in slot y.
  const MultiPolynomial s = x;
  const MultiPolynomial u = y;
  const MultiPolynomial diff_cubes = s.pow(3) - u.pow(3);
  b.exact("(s-u)(s^2+su+u^2) = s^3-u^3", (s - u) * (s * s + s * u + u * u) == diff_cubes, diff_cubes.to_string());
  const MultiPolynomial substituted = diff_cubes.compose({cubes, ZOmega{3, 0} * xyz, MultiPolynomial()});
  b.exact("s = x^3+y^3+z^3, u = 3xyz: s^3-u^3 = (x^3+y^3+z^3)^3 - 27x^3y^3z^3", substituted == target,
          "u^3 = 27x^3y^3z^3");

  const Dec50 third = Dec50(1) / 3;
  const Dec50 xa = pow(Dec50(1), third), yb = pow(Dec50(8), third), zc = pow(Dec50(27), third);
  const Dec50 displayed = (xa * xa + yb * yb + zc * zc - xa * yb - xa * zc - yb * zc) /
                          (Dec50(1 + 8 + 27) - 3 * pow(Dec50(1 * 8 * 27), third));
  const Dec50 err = abs(displayed - Dec50(1) / 6);
  b.numeric("a=1, b=8, c=27: rationalized form equals 1/6", err < tolerance::kEvaluation, "|err|=" + sci(err));
  b.headline("nine-factor product verified");
  return b.finish();
}

}  // namespace coffin::problems
