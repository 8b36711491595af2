#include "coffin/problems/problems.hpp"

#include <chrono>
#include <functional>

namespace coffin::problems {

namespace {

using Verifier = std::function<VerificationReport(std::uint64_t)>;

struct Entry {
  ProblemInfo info;
  Verifier run;
};

const std::vector<Entry>& entries() {
  using K = VerifierKind;
  static const std::vector<Entry> table{
      {{"p01", "inequality in sqrt(1-x), sqrt(1+x): x in [3/5, 1]", K::ExactCertificate, {}}, verify_p01},
      {{"p07", "F(x1)-F(x2) <= (x1-x2)^2 forces F constant", K::Oracle, {}}, verify_p07},
      {{"p10", "K on AB, M on BC with AK = KM = MC", K::Construction, {"p10"}}, verify_p10},
      {{"p12", "2 cbrt(2y-1) = y^3+1 has roots 1, (-1+-sqrt5)/2", K::ExactCertificate, {}}, verify_p12},
      {{"p17", "sin^7 x + 1/sin^3 x = cos^7 x + 1/cos^3 x: x = pi/4 + k pi", K::ExactCertificate, {}},
       verify_p17},
      {{"p19", "line through M cutting a given or least perimeter off an angle", K::Construction,
        {"p19a", "p19b"}},
       verify_p19},
      {{"p22", "perpendicular to a diameter with a straightedge only", K::Construction, {"p22"}}, verify_p22},
      {{"p26", "triangle with sides AO, BO, CO: angles y-60, 300-x-y, x-60", K::Oracle, {}}, verify_p26},
      {{"p30", "fixed distance sum to two lines: a rectangle", K::Construction, {"p30"}}, verify_p30},
      {{"p31", "tangency points of a space quadrilateral are coplanar", K::Oracle, {}}, verify_p31},
      {{"p38", "x^3-3x+1 has irrational roots, one is 2 sin 10", K::ExactCertificate, {}}, verify_p38},
      {{"p42", "six points, pairwise integer distances, no three collinear", K::ExactCertificate, {}},
       verify_p42},
      {{"p45", "no equilateral triangle on the square lattice", K::ExactCertificate, {}}, verify_p45},
      {{"p48", "quadrilateral from four sides and a midline", K::Construction, {"p48"}}, verify_p48},
      {{"p49", "cyclic quadrilateral maximizes area", K::Oracle, {}}, verify_p49},
      {{"p50", "six equal parts with a straightedge and a parallel", K::Construction, {"p50"}}, verify_p50},
      {{"p52", "log2(3) > log3(5)", K::ExactCertificate, {}}, verify_p52},
      {{"p61", "125^100 has 210 digits", K::ExactCertificate, {}}, verify_p61},
      {{"p65", "rationalize 1/(cbrt a + cbrt b + cbrt c)", K::ExactCertificate, {}}, verify_p65},
      {{"p68", "square through four points on its sides", K::Construction, {"p68"}}, verify_p68},
      {{"p71", "least area between a monotone graph and two levels", K::Oracle, {}}, verify_p71},
  };
  return table;
}

}  // namespace

const std::vector<ProblemInfo>& problem_catalog() {
  static const std::vector<ProblemInfo> infos = [] {
    std::vector<ProblemInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const ProblemInfo* find_problem(std::string_view id) {
  for (const auto& info : problem_catalog()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

VerificationReport verify(const std::string& problem_id, std::uint64_t seed) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.info.id == problem_id) entry = &e;
  }
  if (entry == nullptr) throw UnknownProblem("unknown problem id: " + problem_id);

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  try {
    report = entry->run(seed);
  } catch (const std::exception& e) {
    report = VerificationReport{};
    report.status = Status::Error;
    report.error = e.what();
  }
  report.problem_id = problem_id;
  report.seed = seed;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace coffin::problems
