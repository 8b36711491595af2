#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "coffin/exactnum/int_polynomial.hpp"
#include "coffin/problems/problems.hpp"

using namespace coffin;
using namespace coffin::problems;
using euclid::Point;
using exactnum::BigInt;
using exactnum::BigRational;
using exactnum::ExactReal;

namespace {

bool has_certificate(const VerificationReport& r, const std::string& needle) {
  for (const auto& c : r.certificates) {
    if (c.claim.find(needle) != std::string::npos || c.witness.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

// ---- exact certificates ----

TEST(P01, IntervalIsThreeFifthsToOne) {
  const auto iv = p01_certificate();
  EXPECT_EQ(iv.lo, ExactReal(BigRational(3, 5)));
  EXPECT_EQ(iv.hi, ExactReal(1));
  EXPECT_TRUE(iv.lo_closed);
  EXPECT_TRUE(iv.hi_closed);
  EXPECT_TRUE(iv.contains(ExactReal(BigRational(3, 5))));
  EXPECT_TRUE(iv.contains(ExactReal(1)));
  EXPECT_FALSE(iv.contains(ExactReal(BigRational(1, 2))));
}

TEST(P01, EndpointSubstitutions) {
  // x = 0: lhs 0, rhs 11 - 16 = -5.
  const ExactReal rhs0 = ExactReal(11) * ExactReal::sqrt(ExactReal(1)) - ExactReal(16) * ExactReal::sqrt(ExactReal(1));
  EXPECT_EQ(rhs0, ExactReal(-5));
  const auto r = verify_p01(0);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has_certificate(r, "fails at x = 0"));
}

TEST(P12, RootsAreExact) {
  const auto roots = p12_roots();
  ASSERT_EQ(roots.size(), 3u);
  const ExactReal s5 = ExactReal::sqrt(ExactReal(5));
  EXPECT_EQ(roots[0], (ExactReal(-1) - s5) / 2);
  EXPECT_EQ(roots[1], (ExactReal(-1) + s5) / 2);
  EXPECT_EQ(roots[2], ExactReal(1));
  // y = 1: (1+1)^3 = 8 = 8(2-1)
  EXPECT_EQ(exactnum::pow(BigInt(2), 3), 8 * (2 * 1 - 1));
  // y = 0: 1 != -8
  EXPECT_NE(exactnum::pow(BigInt(0 + 1), 3), 8 * (2 * 0 - 1));
}

TEST(P12, ProductOfLinearFactors) {
  const auto r = p12_roots();
  // Expand (y - r0)(y - r1)(y - r2) coefficient by coefficient.
  const ExactReal c2 = -(r[0] + r[1] + r[2]);
  const ExactReal c1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
  const ExactReal c0 = -(r[0] * r[1] * r[2]);
  EXPECT_EQ(c2, ExactReal(0));
  EXPECT_EQ(c1, ExactReal(-2));
  EXPECT_EQ(c0, ExactReal(1));
}

TEST(P17, BoundIs49Over64) {
  const auto s = p17_solutions();
  EXPECT_EQ(s.bound, BigRational(49, 64));
  EXPECT_LT(s.bound, 1);
  EXPECT_TRUE(s.residue_exact);
  EXPECT_LT(s.residual_pi4, 1e-12);
  EXPECT_GT(s.residual_pi3, 1e-12);
  // 1/64 + 1/16 + 1/16 + 1/8 + 1/2
  EXPECT_EQ(BigRational(1, 64) + BigRational(1, 16) + BigRational(1, 16) + BigRational(1, 8) + BigRational(1, 2),
            BigRational(49, 64));
}

TEST(P38, NoRationalRootAndTrigRoot) {
  const exactnum::IntPolynomial p{1, -3, 0, 1};
  EXPECT_TRUE(exactnum::rational_roots(p).empty());
  EXPECT_EQ(p(BigRational(1)), -1);
  EXPECT_EQ(p(BigRational(-1)), 3);
  const double x = 2 * std::sin(3.14159265358979323846 / 18);
  EXPECT_LT(std::abs(x * x * x - 3 * x + 1), 1e-12);
  EXPECT_TRUE(p38_certificate().passed());
}

TEST(P42, IntegerDistances) {
  const auto r = p42_points();
  EXPECT_TRUE(r.passed());
  int integer_distances = 0;
  for (const auto& c : r.certificates) {
    if (c.claim.find("is an integer") != std::string::npos && c.pass) ++integer_distances;
  }
  EXPECT_EQ(integer_distances, 15);
  // (25,0)-(7,24): 18^2 + 24^2 = 900; (7,24)-(7,-24): 48.
  EXPECT_TRUE(has_certificate(r, "d^2=900 d=30"));
  EXPECT_TRUE(has_certificate(r, "d^2=2304 d=48"));
  // (25,0), (7,24), (-7,24) are not collinear.
  EXPECT_NE((7 - 25) * (24 - 0) - (24 - 0) * (-7 - 25), 0);
}

TEST(P45, SmallRadiusOracle) {
  // Independent brute force over all triples at radius 2.
  const int radius = 2;
  int equilateral = 0;
  std::vector<std::pair<int, int>> pts;
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y) pts.emplace_back(x, y);
  auto d2 = [](auto p, auto q) {
    return (p.first - q.first) * (p.first - q.first) + (p.second - q.second) * (p.second - q.second);
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (d2(pts[i], pts[j]) == d2(pts[j], pts[k]) && d2(pts[j], pts[k]) == d2(pts[k], pts[i])) ++equilateral;
  EXPECT_EQ(equilateral, 0);
  const auto r = p45_search(radius);
  EXPECT_EQ(r.pairs, 25u * 24u);
  EXPECT_EQ(r.lattice_triangles, 0u);
  EXPECT_EQ(r.rational_apexes, 0u);
  EXPECT_THROW(p45_search(0), std::invalid_argument);
}

TEST(P45, Radius20) {
  const auto r = p45_search(20);
  EXPECT_EQ(r.pairs, 1681u * 1680u);
  EXPECT_EQ(r.lattice_triangles, 0u);
}

TEST(P52, Certificates) {
  const auto r = p52_certificate();
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has_certificate(r, "9 > 8"));
  EXPECT_TRUE(has_certificate(r, "25 < 27"));
  EXPECT_GT(std::log(3.0) / std::log(2.0), std::log(5.0) / std::log(3.0));
}

TEST(P61, DigitsAndBounds) {
  const auto r = p61_digits();
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has_certificate(r, "digits=210"));
  EXPECT_EQ(exactnum::pow(BigInt(125), 100).str().size(), 210u);
}

TEST(P65, Identities) {
  const auto r = p65_identity_check();
  EXPECT_TRUE(r.passed());
  // (1+2+3)(1+4+9-2-6-3) = 18 = 1+8+27-18
  EXPECT_EQ(6 * (14 - 11), 18);
  EXPECT_EQ(36 - 18, 18);
  const double x = 1, y = 2, z = 3;
  const double displayed = (x * x + y * y + z * z - x * y - x * z - y * z) / (1 + 8 + 27 - 3 * std::cbrt(216.0));
  EXPECT_NEAR(displayed, 1.0 / 6, 1e-12);
}

// ---- oracles ----

TEST(P07, Catalog) {
  const auto grid = p07_default_grid();
  EXPECT_FALSE(p07_probe(P07Function::Constant5, grid).violation);
  EXPECT_TRUE(p07_probe(P07Function::Linear, grid).violation);
  EXPECT_TRUE(p07_probe(P07Function::Sine, grid).violation);
  EXPECT_TRUE(p07_probe(P07Function::Quadratic, grid).violation);
  const auto lin = p07_probe(P07Function::Linear, {{0.5, 0.0}});
  EXPECT_TRUE(lin.violation);
  EXPECT_DOUBLE_EQ(lin.lhs, 0.5);
  EXPECT_DOUBLE_EQ(lin.rhs, 0.25);
  const auto sine = p07_probe(P07Function::Sine, {{0.1, 0.0}});
  EXPECT_TRUE(sine.violation);
  EXPECT_NEAR(sine.lhs, 0.0998334, 1e-6);
  EXPECT_THROW(p07_probe(P07Function::Linear, {}), std::invalid_argument);
}

TEST(P26, Examples) {
  EXPECT_EQ(p26_angles(150, 120), (std::array<BigRational, 3>{60, 30, 90}));
  EXPECT_EQ(p26_angles(120, 120), (std::array<BigRational, 3>{60, 60, 60}));
  EXPECT_THROW(p26_angles(60, 120), exactnum::DomainError);
  EXPECT_THROW(p26_angles(100, 70), exactnum::DomainError);
  EXPECT_THROW(p26_angles(170, 150), exactnum::DomainError);
}

TEST(P26, CenterSeesEqualDistances) {
  const auto r = p26_reconstruct(120, 120);
  EXPECT_TRUE(r.inside);
  for (double a : r.law_of_cosines) EXPECT_NEAR(a, 60, 1e-9);
}

TEST(P26, PropertyFormulaMatchesReconstruction) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> pick(61 * 4, 179 * 4);
  int tested = 0;
  while (tested < 200) {
    const BigRational x(pick(rng), 4), y(pick(rng), 4);
    if (!(x + y > 181 && x + y < 299)) continue;
    ++tested;
    const auto f = p26_angles(x, y);
    EXPECT_EQ(f[0] + f[1] + f[2], 180);
    const auto r = p26_reconstruct(x.convert_to<double>(), y.convert_to<double>());
    ASSERT_TRUE(r.inside);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(r.rotated[i], f[i].convert_to<double>(), 1e-9);
      EXPECT_NEAR(r.law_of_cosines[i], f[i].convert_to<double>(), 1e-9);
    }
  }
}

TEST(P30, PerpendicularUnitSquare) {
  const auto v = p30_vertices(90, ExactReal(1));
  EXPECT_EQ(v[0], (Point{ExactReal(1), ExactReal(0)}));
  EXPECT_EQ(v[1], (Point{ExactReal(0), ExactReal(1)}));
  EXPECT_EQ(v[2], (Point{ExactReal(-1), ExactReal(0)}));
  EXPECT_EQ(v[3], (Point{ExactReal(0), ExactReal(-1)}));
  // |x| + |y| = 1 on the edge from (1,0) to (0,1), by hand.
  for (int k = 0; k <= 10; ++k) {
    const BigRational t(k, 10);
    EXPECT_EQ(abs(1 - t) + abs(t), 1);
  }
  EXPECT_TRUE(p30_locus_check(90, ExactReal(1), 10).passed());
}

TEST(P30, ScalingDoublesVertices) {
  for (int k = 1; k < 12; ++k) {
    const auto one = p30_vertices(15 * k, ExactReal(1));
    const auto two = p30_vertices(15 * k, ExactReal(2));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(two[i], ExactReal(2) * one[i]);
    EXPECT_TRUE(p30_locus_check(15 * k, ExactReal(BigRational(3, 7)), 4).passed()) << 15 * k;
  }
}

TEST(P30, Errors) {
  EXPECT_THROW(p30_vertices(0, ExactReal(1)), DegenerateLines);
  EXPECT_THROW(p30_vertices(180, ExactReal(1)), DegenerateLines);
  EXPECT_THROW(p30_vertices(20, ExactReal(1)), std::invalid_argument);
  EXPECT_THROW(p30_vertices(45, ExactReal(0)), std::invalid_argument);
}

TEST(P31, PlanarRhombus) {
  const auto inst = p31_planar_rhombus();
  EXPECT_EQ(inst.defect, 0.0);
  EXPECT_EQ(inst.residual, 0.0);
}

TEST(P31, Seed7) {
  const auto inst = p31_instance(7);
  EXPECT_LT(inst.residual, 1e-10);
  EXPECT_GT(inst.vertex_defect, 1e-3);
  EXPECT_LT(inst.defect, 1e-9);
  EXPECT_LT(inst.centroid_distance, 1e-9);
  EXPECT_GT(p31_perturbed_defect(inst, 1e-3), 1e-6);
  for (double t : inst.tangent_lengths) {
    EXPECT_GE(t, 0.5);
    EXPECT_LE(t, 2.0);
  }
}

TEST(P31, PropertyManySeeds) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto inst = p31_instance(seed);
    EXPECT_LT(inst.defect, 1e-9) << seed;
    EXPECT_LT(inst.centroid_distance, 1e-9) << seed;
    // Every tangency point is on the unit sphere.
    for (const auto& t : inst.tangency) EXPECT_NEAR(euclid::norm(t), 1.0, 1e-10);
  }
}

TEST(P49, Examples) {
  EXPECT_NEAR(p49_compare({1, 1, 1, 1}, 100, 0).cyclic_area, 1.0, 1e-9);
  const auto rect = p49_compare({3, 4, 3, 4}, 100, 0);
  EXPECT_NEAR(rect.cyclic_area, 12.0, 1e-9);
  EXPECT_NEAR(rect.circumradius, 2.5, 1e-9);
  const auto r = p49_compare({2, 3, 4, 5}, 10000, 1);
  EXPECT_EQ(r.trials, 10000);
  EXPECT_EQ(r.violations, 0);
  EXPECT_NEAR(r.cyclic_area, std::sqrt(120.0), 1e-9);
  EXPECT_THROW(p49_compare({1, 1, 1, 3}, 10, 0), InfeasibleSides);
  EXPECT_THROW(p49_compare({1, 1, 0, 1}, 10, 0), InfeasibleSides);
}

TEST(P49, PropertyCyclicMatchesBrahmagupta) {
  std::mt19937_64 rng(49);
  std::uniform_int_distribution<int> side(1, 40);
  int tested = 0;
  while (tested < 50) {
    std::array<BigRational, 4> s{BigRational(side(rng), 4), BigRational(side(rng), 4), BigRational(side(rng), 4),
                                 BigRational(side(rng), 4)};
    const BigRational total = s[0] + s[1] + s[2] + s[3];
    bool ok = true;
    for (const auto& x : s) ok = ok && 2 * x < total;
    if (!ok) continue;
    ++tested;
    const auto r = p49_compare(s, 200, tested);
    EXPECT_NEAR(r.cyclic_area, r.brahmagupta, 1e-9 * std::max(1.0, r.brahmagupta));
    EXPECT_EQ(r.violations, 0);
  }
}

TEST(P71, Catalog) {
  const auto lin = p71_probe(P71Function::Identity, 0, 1);
  EXPECT_NEAR(lin.x_star, 0.5, 1e-12);
  EXPECT_LE(std::abs(lin.grid_minimizer - 0.5), 1e-4);
  const auto cube = p71_probe(P71Function::Cube, -1, 1);
  EXPECT_NEAR(cube.x_star, 0.0, 1e-12);
  EXPECT_LE(std::abs(cube.grid_minimizer), 1e-4);
  const auto ex = p71_probe(P71Function::Exp, 1, 3);
  EXPECT_NEAR(std::exp(ex.x_star), 2.0, 1e-12);
  EXPECT_LE(std::abs(ex.grid_minimizer - std::log(2.0)), 1e-4);
}

TEST(P71, AreaClosedForm) {
  // f = x between 0 and 1: area(c) = c^2/2 + (1-c)^2/2.
  for (double c : {0.0, 0.25, 0.5, 0.9}) {
    EXPECT_NEAR(p71_area(P71Function::Identity, 0, 1, c), c * c / 2 + (1 - c) * (1 - c) / 2, 1e-10);
  }
}

TEST(P71, Errors) {
  EXPECT_THROW(p71_probe(P71Function::Exp, -1, 3), LevelsNotAttained);
  EXPECT_THROW(p71_probe(P71Function::Identity, 1, 0), LevelsNotAttained);
  EXPECT_THROW(p71_probe(P71Function::Cube, 0, 100), LevelsNotAttained);
}

// ---- constructions ----

TEST(Constructions, DefaultsPass) {
  for (const auto& id : construction_ids()) {
    const auto r = run_construction(id, {}, 0);
    EXPECT_TRUE(r.passed()) << id;
  }
}

TEST(Constructions, P50FiveEqualParts) {
  const auto r = run_construction("p50", {}, 0);
  int equal = 0;
  for (const auto& c : r.certificates) {
    if (c.claim.rfind("assert equal_length", 0) == 0 && c.pass) ++equal;
  }
  EXPECT_EQ(equal, 5);
  EXPECT_TRUE(has_certificate(r, "circles=0"));
}

TEST(Constructions, PropertyScaleInvariance) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(1, 99), den(1, 17);
  for (const auto& id : construction_ids()) {
    const auto& program = construction_program(id);
    const auto base = construction_trace(id);
    const auto defaults = sketch::resolve_params(program, {});
    for (int k = 0; k < 3; ++k) {
      const BigRational factor(num(rng), den(rng));
      const auto scaled = construction_trace(id, sketch::scale_bindings(program, defaults, factor));
      ASSERT_EQ(scaled.assertions.size(), base.assertions.size());
      for (std::size_t i = 0; i < base.assertions.size(); ++i) {
        EXPECT_EQ(scaled.assertions[i].pass, base.assertions[i].pass) << id << " x" << factor;
      }
    }
  }
}

TEST(Constructions, PropertyP48RoundTrip) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto quad = p48_random_quadrilateral(seed);
    const auto inst = p48_instance_from(quad);
    const auto trace = construction_trace("p48", inst);
    EXPECT_TRUE(trace.all_pass()) << seed;
    // Reconstructed side lengths equal the measured ones.
    const auto& b = std::get<Point>(trace.find("B")->object);
    const auto& a = std::get<Point>(trace.find("A")->object);
    EXPECT_EQ(euclid::distance_sq(a, b), euclid::distance_sq(quad[0], quad[1]));
  }
}

TEST(Constructions, PropertyP68RoundTrip) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto sq = p68_random_square(seed);
    sketch::Bindings inst{{"A", sq.side_points[0]}, {"B", sq.side_points[1]}, {"C", sq.side_points[2]},
                          {"D", sq.side_points[3]}};
    const auto trace = construction_trace("p68", inst);
    EXPECT_TRUE(trace.all_pass()) << seed;
    for (const char* name : {"V1", "V2", "V3", "V4"}) {
      const auto& v = std::get<Point>(trace.find(name)->object);
      bool found = false;
      for (const auto& w : sq.vertices) found = found || v == w;
      EXPECT_TRUE(found) << seed << " " << name;
    }
  }
}

TEST(Constructions, PropertyP19aRoundTrip) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto trace = construction_trace("p19a", p19a_round_trip_instance(seed));
    EXPECT_TRUE(trace.all_pass()) << seed;
  }
}

TEST(Constructions, StraightedgeScriptsHaveNoCircles) {
  for (const char* id : {"p22", "p50"}) {
    const auto trace = construction_trace(id);
    EXPECT_EQ(trace.tools, sketch::Tools::StraightedgeOnly);
    EXPECT_EQ(trace.constructed_circles(), 0u);
  }
}

TEST(Constructions, UnknownScript) {
  EXPECT_THROW(construction_program("p52"), UnknownProblem);
}

// ---- dispatcher ----

TEST(Dispatcher, TotalOverCatalog) {
  ASSERT_EQ(problem_catalog().size(), 21u);
  std::set<std::string> ids;
  for (const auto& info : problem_catalog()) {
    ids.insert(info.id);
    const auto r = verify(info.id, 0);
    EXPECT_EQ(r.problem_id, info.id);
    EXPECT_EQ(r.status, Status::Pass) << info.id << ": " << r.error;
    bool all = !r.certificates.empty();
    for (const auto& c : r.certificates) all = all && c.pass;
    EXPECT_EQ(r.passed(), all) << info.id;
  }
  EXPECT_EQ(ids.size(), 21u);
}

TEST(Dispatcher, UnknownId) { EXPECT_THROW(verify("p99"), UnknownProblem); }

TEST(Dispatcher, DeterministicGivenSeed) {
  for (const char* id : {"p26", "p31", "p48", "p68"}) {
    const auto a = verify(id, 3);
    const auto b = verify(id, 3);
    ASSERT_EQ(a.certificates.size(), b.certificates.size());
    for (std::size_t i = 0; i < a.certificates.size(); ++i) {
      EXPECT_EQ(a.certificates[i].claim, b.certificates[i].claim);
      EXPECT_EQ(a.certificates[i].witness, b.certificates[i].witness);
    }
  }
}

TEST(Dispatcher, OtherSeedsPass) {
  for (std::uint64_t seed : {1u, 2u, 17u}) {
    for (const char* id : {"p10", "p19", "p26", "p30", "p31", "p48", "p49", "p68"}) {
      const auto r = verify(id, seed);
      EXPECT_TRUE(r.passed()) << id << " seed " << seed;
    }
  }
}

TEST(Report, StatusFollowsCertificates) {
  ReportBuilder ok("x", 0);
  ok.exact("a", true, "");
  EXPECT_EQ(ok.finish().status, Status::Pass);
  ReportBuilder bad("x", 0);
  bad.exact("a", true, "");
  bad.numeric("b", false, "");
  EXPECT_EQ(bad.finish().status, Status::Fail);
  ReportBuilder empty("x", 0);
  EXPECT_EQ(empty.finish().status, Status::Fail);
}
