// One line per acceptance criterion; exit status 1 if any is red.
#include <chrono>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <unistd.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "coffin/cli/cli.hpp"
#include "coffin/exactnum/int_polynomial.hpp"
#include "coffin/exactnum/power_comparison.hpp"
#include "coffin/problems/problems.hpp"

using namespace coffin;
using namespace coffin::problems;
using exactnum::BigInt;
using exactnum::BigRational;
using exactnum::ExactReal;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kFastSeconds = 1.0;
constexpr double kP45Seconds = 10.0;
constexpr double kP65Seconds = 5.0;
constexpr double kSuiteSeconds = 60.0;
constexpr double kTrigResidual = 1e-12;
constexpr double kGeometry = 1e-9;
constexpr double kCoplanar = 1e-9;
constexpr double kPerturbed = 1e-6;
constexpr double kMinimizer = 1e-4;
constexpr int kRescalings = 5;

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << " [threw: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.ok) ++failures;
  std::printf("%s  %-34s (%.2f s)%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), s, c.notes.str().c_str());
  std::fflush(stdout);
}

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool all_exact_pass(const VerificationReport& r, const std::string& claim_part) {
  bool seen = false;
  for (const auto& c : r.certificates) {
    if (c.claim.find(claim_part) == std::string::npos && c.witness.find(claim_part) == std::string::npos) continue;
    seen = true;
    if (!c.pass || c.kind != CertificateKind::Exact) return false;
  }
  return seen;
}

bool has_passing(const VerificationReport& r, const std::string& claim_part) {
  for (const auto& c : r.certificates) {
    if (c.claim.find(claim_part) != std::string::npos && c.pass) return true;
  }
  return false;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

int main() {
  criterion("p01 interval [3/5, 1]", [](Check& c) {
    ExactInterval iv;
    VerificationReport r;
    const double t = seconds([&] {
      iv = p01_certificate();
      r = verify_p01(0);
    });
    c.expect(iv.lo == ExactReal(BigRational(3, 5)) && iv.hi == ExactReal(1) && iv.lo_closed && iv.hi_closed,
             "interval is not [3/5, 1]");
    c.expect(iv.contains(ExactReal(BigRational(3, 5))) && !iv.contains(ExactReal(BigRational(59, 100))), "closed at 3/5");
    c.expect(all_exact_pass(r, "= (2y-1)("), "factorization identity");
    c.expect(r.passed(), "report");
    c.expect(t < kFastSeconds, "runtime");
  });

  criterion("p12 roots {1, (-1+-sqrt5)/2}", [](Check& c) {
    std::vector<ExactReal> roots;
    const double t = seconds([&] { roots = p12_roots(); });
    const ExactReal s5 = ExactReal::sqrt(ExactReal(5));
    c.expect(roots.size() == 3, "three roots");
    c.expect(roots.size() == 3 && roots[0] == (ExactReal(-1) - s5) / 2 && roots[1] == (ExactReal(-1) + s5) / 2 &&
                 roots[2] == ExactReal(1),
             "root values");
    if (roots.size() == 3) {
      // (y - r0)(y - r1)(y - r2) against y^3 - 2y + 1
      c.expect(-(roots[0] + roots[1] + roots[2]) == ExactReal(0), "y^2 coefficient");
      c.expect(roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2] == ExactReal(-2), "y coefficient");
      c.expect(-(roots[0] * roots[1] * roots[2]) == ExactReal(1), "constant");
    }
    c.expect(t < kFastSeconds, "runtime");
  });

  criterion("p17 bound 49/64 < 1", [](Check& c) {
    P17Solutions s;
    const double t = seconds([&] { s = p17_solutions(); });
    c.expect(s.bound == BigRational(49, 64), "bound");
    c.expect(s.bound < 1, "bound below 1");
    c.expect(t < kFastSeconds, "runtime");
  });

  criterion("p38 irreducible, root 2 sin 10", [](Check& c) {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    const exactnum::IntPolynomial p{1, -3, 0, 1};
    c.expect(exactnum::rational_roots(p).empty(), "rational roots found");
    const Dec x = 2 * boost::multiprecision::sin(boost::math::constants::pi<Dec>() / 18);
    const Dec residual = abs(x * x * x - 3 * x + 1);
    c.expect(residual < Dec(kTrigResidual), "residual");
    c.expect(p38_certificate().passed(), "report");
  });

  criterion("p42 six points", [](Check& c) {
    const std::vector<std::pair<long, long>> pts{{25, 0}, {-25, 0}, {7, 24}, {7, -24}, {-7, 24}, {-7, -24}};
    int squares = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const BigInt dx = pts[i].first - pts[j].first, dy = pts[i].second - pts[j].second;
        const BigInt d2 = dx * dx + dy * dy;
        const BigInt r = boost::multiprecision::sqrt(d2);
        if (r * r == d2) ++squares;
      }
    c.expect(squares == 15, "perfect squares " + std::to_string(squares));
    int collinear = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          const long cross = (pts[j].first - pts[i].first) * (pts[k].second - pts[i].second) -
                             (pts[j].second - pts[i].second) * (pts[k].first - pts[i].first);
          if (cross == 0) ++collinear;
        }
    c.expect(collinear == 0, "collinear triples");
    const auto r = p42_points();
    c.expect(r.passed(), "report");
    c.expect(std::all_of(r.certificates.begin(), r.certificates.end(),
                         [](const auto& x) { return x.kind == CertificateKind::Exact; }),
             "all certificates exact");
  });

  criterion("p45 radius 20 search", [](Check& c) {
    P45Result r;
    const double t = seconds([&] { r = p45_search(20); });
    c.expect(r.lattice_triangles == 0, "triangles found");
    c.expect(r.pairs == 1681ull * 1680ull, "pair count");
    c.expect(t < kP45Seconds, "runtime");
  });

  criterion("p52 log2(3) > log3(5)", [](Check& c) {
    const auto r = p52_certificate();
    c.expect(all_exact_pass(r, "9 > 8"), "9 > 8");
    c.expect(all_exact_pass(r, "25 < 27"), "25 < 27");
    // log2 3 > 3/2 and log3 5 < 3/2
    c.expect(exactnum::compare_log(3, 2, 3, 2).ordering == std::strong_ordering::greater, "log2 3 vs 3/2");
    c.expect(exactnum::compare_log(5, 3, 3, 2).ordering == std::strong_ordering::less, "log3 5 vs 3/2");
    c.expect(r.passed(), "report");
  });

  criterion("p61 210 digits", [](Check& c) {
    c.expect(exactnum::digit_count(exactnum::pow(BigInt(125), 100)) == 210, "digit count");
    c.expect(exactnum::pow(BigInt(125), 100).str().size() == 210, "decimal string length");
    BigRational q = 1;
    for (int i = 0; i < 30; ++i) q *= BigRational(1024, 1000);
    c.expect(1 < q && q < 10, "bounds on (1024/1000)^30");
    c.expect(p61_digits().passed(), "report");
  });

  criterion("p65 rationalizing identities", [](Check& c) {
    VerificationReport r;
    const double t = seconds([&] { r = p65_identity_check(); });
    c.expect(r.passed(), "report");
    c.expect(all_exact_pass(r, "eight conjugates"), "nine-factor product");
    c.expect(t < kP65Seconds, "runtime");
    // Complex evaluation of the nine factors at random integer points.
    const std::complex<double> w = std::polar(1.0, 2 * 3.14159265358979323846 / 3);
    std::mt19937_64 rng(65);
    std::uniform_int_distribution<int> pick(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
      const double x = pick(rng), y = pick(rng), z = pick(rng);
      std::complex<double> prod = 1;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod *= x + std::pow(w, i) * y + std::pow(w, j) * z;
      const double s = x * x * x + y * y * y + z * z * z;
      const double target = s * s * s - 27 * x * x * x * y * y * y * z * z * z;
      if (std::abs(prod - target) > 1e-6 * std::max(1.0, std::abs(target))) {
        c.expect(false, "complex evaluation");
        break;
      }
    }
  });

  criterion("constructions exact + rescaled", [](Check& c) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(1, 97), den(1, 13);
    for (const char* id : {"p10", "p19a", "p22", "p30", "p48", "p50", "p68"}) {
      c.expect(run_construction(id, {}, 0).passed(), std::string(id) + " default");
      const auto& program = construction_program(id);
      const auto defaults = sketch::resolve_params(program, {});
      for (int k = 0; k < kRescalings; ++k) {
        const BigRational factor(num(rng), den(rng));
        const auto trace = construction_trace(id, sketch::scale_bindings(program, defaults, factor));
        c.expect(trace.all_pass() && !trace.assertions.empty(), std::string(id) + " scaled");
      }
    }
    for (const char* id : {"p22", "p50"}) {
      const auto trace = construction_trace(id);
      c.expect(trace.tools == sketch::Tools::StraightedgeOnly, std::string(id) + " tools");
      c.expect(trace.constructed_circles() == 0, std::string(id) + " circles");
    }
  });

  criterion("oracle problems", [](Check& c) {
    const auto p19 = verify_p19(0);
    c.expect(has_passing(p19, "no sampled line through M cuts a smaller perimeter"), "p19b minimality");
    c.expect(p19.passed(), "p19 report");

    std::mt19937_64 rng(26);
    std::uniform_int_distribution<int> eighth(61 * 8, 179 * 8);
    for (int n = 0; n < 20;) {
      const BigRational x(eighth(rng), 8), y(eighth(rng), 8);
      if (!(x + y > 181 && x + y < 299)) continue;
      ++n;
      const auto exact = p26_angles(x, y);
      const auto rec = p26_reconstruct(x.convert_to<double>(), y.convert_to<double>());
      for (int i = 0; i < 3; ++i) {
        if (std::abs(rec.rotated[i] - exact[i].convert_to<double>()) > kGeometry) c.expect(false, "p26 angles");
      }
    }

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = p31_instance(seed);
      c.expect(inst.defect < kCoplanar, "p31 seed " + std::to_string(seed));
      c.expect(p31_perturbed_defect(inst, 1e-3) > kPerturbed, "p31 perturbed " + std::to_string(seed));
    }

    const auto skew = p49_compare({2, 3, 4, 5}, 10000, 0);
    c.expect(skew.violations == 0 && skew.trials == 10000, "p49 samples");
    c.expect(std::abs(skew.cyclic_area - std::sqrt(120.0)) < kGeometry, "p49 Brahmagupta");
    c.expect(std::abs(p49_compare({3, 4, 3, 4}, 10000, 0).cyclic_area - 12) < kGeometry, "p49 rectangle");

    const auto lin = p71_probe(P71Function::Identity, 0, 1);
    const auto cube = p71_probe(P71Function::Cube, -1, 1);
    const auto ex = p71_probe(P71Function::Exp, 1, 3);
    c.expect(std::abs(lin.grid_minimizer - 0.5) <= kMinimizer, "p71 identity");
    c.expect(std::abs(cube.grid_minimizer) <= kMinimizer, "p71 cube");
    c.expect(std::abs(ex.grid_minimizer - std::log(2.0)) <= kMinimizer, "p71 exp");

    const auto grid = p07_default_grid();
    c.expect(!p07_probe(P07Function::Constant5, grid).violation, "p07 constant");
    c.expect(p07_probe(P07Function::Linear, grid).violation, "p07 linear");
    c.expect(p07_probe(P07Function::Sine, grid).violation, "p07 sine");
    c.expect(p07_probe(P07Function::Quadratic, grid).violation, "p07 quadratic");
  });

  criterion("full suite, seed 0, deterministic", [](Check& c) {
    const auto root = fs::temp_directory_path() / ("coffin_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    std::array<fs::path, 2> dirs{root / "first", root / "second"};
    for (const auto& dir : dirs) {
      const std::string d = dir.string();
      const char* argv[] = {"coffin", "verify", "--all", "--seed", "0", "-o", d.c_str()};
      std::ostringstream out, err;
      int code = -1;
      const double t = seconds([&] { code = cli::run(7, argv, out, err); });
      c.expect(code == 0, "exit status " + std::to_string(code));
      c.expect(t < kSuiteSeconds, "runtime");
    }
    int files = 0;
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      const auto name = entry.path().filename();
      if (name == "timing.json") continue;
      ++files;
      c.expect(slurp(entry.path()) == slurp(dirs[1] / name), "differs: " + name.string());
    }
    c.expect(files == 22, "report count " + std::to_string(files));
    fs::remove_all(root);
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
