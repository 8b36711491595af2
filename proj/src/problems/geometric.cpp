#include "coffin/problems/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace coffin::problems {

using euclid::Point;
using euclid::Point3;
using exactnum::DomainError;

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg(double rad) { return rad * 180.0 / kPi; }
double rad(double deg) { return deg * kPi / 180.0; }

struct Vec2 {
  double x, y;
};
Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
double dot2(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double len(Vec2 a) { return std::hypot(a.x, a.y); }

double angle_at(Vec2 vertex, Vec2 p, Vec2 q) {
  const Vec2 u = p - vertex, v = q - vertex;
  return deg(std::atan2(std::abs(cross2(u, v)), dot2(u, v)));
}

double opposite_angle(double opposite, double s1, double s2) {
  const double c = (s1 * s1 + s2 * s2 - opposite * opposite) / (2 * s1 * s2);
  return deg(std::acos(std::clamp(c, -1.0, 1.0)));
}

// Center of the arc over chord pq that sees pq under `angle` on the side of `side`.
Vec2 arc_center(Vec2 p, Vec2 q, Vec2 side, double angle) {
  const Vec2 mid = 0.5 * (p + q);
  const Vec2 d = q - p;
  Vec2 n{-d.y, d.x};
  if (dot2(n, side - mid) < 0) n = -1.0 * n;
  n = (1.0 / len(n)) * n;
  return mid + (0.5 * len(d) / std::tan(rad(angle))) * n;
}

// ---- p30 ----

// cos(15k degrees) for k = 0..6
ExactReal cos15(int k) {
  const ExactReal r2 = ExactReal::sqrt(ExactReal(2));
  const ExactReal r3 = ExactReal::sqrt(ExactReal(3));
  const ExactReal r6 = ExactReal::sqrt(ExactReal(6));
  switch (k) {
    case 0:
      return ExactReal(1);
    case 1:
      return (r6 + r2) / 4;
    case 2:
      return r3 / 2;
    case 3:
      return r2 / 2;
    case 4:
      return ExactReal(BigRational(1, 2));
    case 5:
      return (r6 - r2) / 4;
    default:
      return ExactReal(0);
  }
}

std::pair<ExactReal, ExactReal> unit_direction(const BigRational& angle_deg) {
  if (angle_deg <= 0 || angle_deg >= 180) throw DegenerateLines("angle must lie strictly between 0 and 180");
  const BigRational steps = angle_deg / 15;
  if (exactnum::denominator(steps) != 1) throw std::invalid_argument("angle must be a multiple of 15 degrees");
  const int k = static_cast<int>(exactnum::numerator(steps));
  if (k <= 6) return {cos15(k), cos15(6 - k)};
  return {-cos15(12 - k), cos15(k - 6)};
}

// |distance to the x-axis| + |distance to the line through 0 with unit direction (c, s)|
ExactReal distance_sum(const Point& p, const ExactReal& c, const ExactReal& s) {
  return abs(p.y) + abs(s * p.x - c * p.y);
}

// ---- p31 ----

Eigen::Vector3d vec(const Point3& p) { return {p.x, p.y, p.z}; }
Point3 pt(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

void finish_instance(P31Instance& inst) {
  const auto& t = inst.tangent_lengths;
  double residual = 0;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  double mass = 0;
  for (int i = 0; i < 4; ++i) {
    const int j = (i + 1) % 4;
    const Eigen::Vector3d vi = vec(inst.vertices[i]), vj = vec(inst.vertices[j]);
    const Eigen::Vector3d ti = (t[j] * vi + t[i] * vj) / (t[i] + t[j]);
    inst.tangency[i] = pt(ti);
    residual = std::max(residual, std::abs(ti.norm() - 1.0));
    residual = std::max(residual, std::abs((vj - vi).dot(ti)));
    residual = std::max(residual, std::abs((vj - vi).norm() - (t[i] + t[j])));
    residual = std::max(residual, std::abs(vi.norm() - std::sqrt(1 + t[i] * t[i])));
    centroid += vi / t[i];
    mass += 1.0 / t[i];
  }
  centroid /= mass;
  inst.residual = residual;
  inst.vertex_defect = euclid::coplanarity_defect(inst.vertices);
  inst.defect = euclid::coplanarity_defect(inst.tangency);
  const Point3 g = pt(centroid);
  inst.centroid_distance = std::max(euclid::distance_to_line(g, inst.tangency[0], inst.tangency[2]),
                                    euclid::distance_to_line(g, inst.tangency[1], inst.tangency[3]));
}

// Damped Newton (minimum-norm steps) on |V_i|² = 1 + t_i², |V_i − V_{i+1}|² = (t_i + t_{i+1})².
bool solve_closure(std::array<Eigen::Vector3d, 4>& v, const std::array<double, 4>& t, int& iterations) {
  auto residuals = [&](const std::array<Eigen::Vector3d, 4>& w) {
    Eigen::Matrix<double, 8, 1> r;
    for (int i = 0; i < 4; ++i) {
      const int j = (i + 1) % 4;
      r(i) = w[i].squaredNorm() - (1 + t[i] * t[i]);
      r(4 + i) = (w[i] - w[j]).squaredNorm() - (t[i] + t[j]) * (t[i] + t[j]);
    }
    return r;
  };
  for (iterations = 0; iterations < 200; ++iterations) {
    const Eigen::Matrix<double, 8, 1> r = residuals(v);
    if (r.lpNorm<Eigen::Infinity>() < 1e-14) return true;
    Eigen::Matrix<double, 8, 12> jac = Eigen::Matrix<double, 8, 12>::Zero();
    for (int i = 0; i < 4; ++i) {
      const int j = (i + 1) % 4;
      jac.block<1, 3>(i, 3 * i) = 2 * v[i].transpose();
      const Eigen::Vector3d e = v[i] - v[j];
      jac.block<1, 3>(4 + i, 3 * i) = 2 * e.transpose();
      jac.block<1, 3>(4 + i, 3 * j) = -2 * e.transpose();
    }
    const Eigen::Matrix<double, 8, 8> normal =
        jac * jac.transpose() + 1e-12 * Eigen::Matrix<double, 8, 8>::Identity();
    const Eigen::Matrix<double, 12, 1> step = -jac.transpose() * normal.ldlt().solve(r);
    double damping = 1.0;
    const double before = r.norm();
    for (int k = 0; k < 30; ++k) {
      std::array<Eigen::Vector3d, 4> trial = v;
      for (int i = 0; i < 4; ++i) trial[i] += damping * step.segment<3>(3 * i);
      if (residuals(trial).norm() < before) {
        v = trial;
        break;
      }
      damping /= 2;
    }
  }
  return residuals(v).lpNorm<Eigen::Infinity>() < 1e-14;
}

// ---- p49 ----

double heron(double a, double b, double c) {
  const double s = (a + b + c) / 2;
  return std::sqrt(std::max(0.0, s * (s - a) * (s - b) * (s - c)));
}

}  // namespace

// ---- p26 ----

std::array<BigRational, 3> p26_angles(const BigRational& x, const BigRational& y) {
  if (!(x > 60 && x < 180 && y > 60 && y < 180 && x + y > 180 && x + y < 300)) {
    throw DomainError("angles outside 60 < x, y < 180, 180 < x + y < 300");
  }
  return {y - 60, 300 - x - y, x - 60};
}

P26Reconstruction p26_reconstruct(double x_deg, double y_deg) {
  const Vec2 b{0, 0}, c{1, 0}, a{0.5, std::sqrt(3.0) / 2};
  const Vec2 k1 = arc_center(b, c, a, x_deg);
  const Vec2 k2 = arc_center(a, c, b, y_deg);
  // Both arcs pass through C; O is the reflection of C in the line of centers.
  const Vec2 axis = k2 - k1;
  const Vec2 rel = c - k1;
  const Vec2 foot = k1 + (dot2(rel, axis) / dot2(axis, axis)) * axis;
  const Vec2 o = 2.0 * foot - c;

  P26Reconstruction out;
  out.inside = cross2(c - b, o - b) > 0 && cross2(a - c, o - c) > 0 && cross2(b - a, o - a) > 0;
  out.measured_x = angle_at(o, b, c);
  out.measured_y = angle_at(o, a, c);

  // Rotation about A by +60 degrees sends B to C.
  const double cs = 0.5, sn = std::sqrt(3.0) / 2;
  const Vec2 d = o - a;
  const Vec2 o2 = a + Vec2{cs * d.x - sn * d.y, sn * d.x + cs * d.y};
  out.rotated = {angle_at(o, o2, c), angle_at(o2, o, c), angle_at(c, o, o2)};

  const double ao = len(a - o), bo = len(b - o), co = len(c - o);
  out.law_of_cosines = {opposite_angle(bo, ao, co), opposite_angle(co, ao, bo), opposite_angle(ao, bo, co)};
  return out;
}

VerificationReport verify_p26(std::uint64_t seed) {
  ReportBuilder b("p26", seed);
  const auto ex1 = p26_angles(150, 120);
  b.exact("(x, y) = (150, 120) gives (60, 30, 90)", ex1 == std::array<BigRational, 3>{60, 30, 90},
          exactnum::to_string(ex1[0]) + ", " + exactnum::to_string(ex1[1]) + ", " + exactnum::to_string(ex1[2]));
  const auto ex2 = p26_angles(120, 120);
  b.exact("(x, y) = (120, 120) gives (60, 60, 60)", ex2 == std::array<BigRational, 3>{60, 60, 60}, "equilateral");

  std::mt19937_64 rng(seed ^ 0x26);
  std::uniform_int_distribution<int> pick(61 * 8, 179 * 8);
  int checked = 0;
  int sums = 0;
  int agree = 0;
  double worst = 0;
  while (checked < 20) {
    const BigRational x(pick(rng), 8), y(pick(rng), 8);
    if (!(x + y > 181 && x + y < 299)) continue;
    ++checked;
    const auto f = p26_angles(x, y);
    if (f[0] + f[1] + f[2] == 180) ++sums;
    const auto r = p26_reconstruct(static_cast<double>(x.convert_to<double>()), y.convert_to<double>());
    double err = std::max(std::abs(r.measured_x - x.convert_to<double>()), std::abs(r.measured_y - y.convert_to<double>()));
    for (int i = 0; i < 3; ++i) {
      err = std::max(err, std::abs(r.rotated[i] - f[i].convert_to<double>()));
      err = std::max(err, std::abs(r.law_of_cosines[i] - f[i].convert_to<double>()));
    }
    worst = std::max(worst, err);
    if (r.inside && err < tolerance::kGeometry) ++agree;
  }
  b.exact("formula angles sum to 180 on 20 random (x, y)", sums == 20, std::to_string(sums) + "/20");
  b.numeric("formula matches the rotated and law-of-cosines reconstructions within 1e-9 degrees", agree == 20,
            std::to_string(agree) + "/20 agree, worst=" + fmt(worst));
  b.headline("(y-60, 300-x-y, x-60)");
  return b.finish();
}

// ---- p30 ----

std::array<Point, 4> p30_vertices(const BigRational& angle_deg, const ExactReal& s) {
  if (s.sign() <= 0) throw std::invalid_argument("distance sum must be positive");
  const auto [c, sn] = unit_direction(angle_deg);
  const ExactReal d = s / sn;
  const Point v1{d, ExactReal(0)};
  const Point v2{d * c, d * sn};
  return {v1, v2, {-v1.x, -v1.y}, {-v2.x, -v2.y}};
}

VerificationReport p30_locus_check(const BigRational& angle_deg, const ExactReal& s, int sample_count) {
  ReportBuilder b("p30", 0);
  const auto [c, sn] = unit_direction(angle_deg);
  const auto v = p30_vertices(angle_deg, s);
  const std::string where = " (angle " + exactnum::to_string(angle_deg) + ", s=" + s.decimal(12) + ")";

  int on_edge = 0, total = 0, interior = 0, exterior = 0;
  for (int i = 0; i < 4; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % 4];
    for (int k = 0; k <= sample_count; ++k) {
      const ExactReal t(BigRational(k, sample_count));
      const Point sample = p + t * (q - p);
      ++total;
      if (distance_sum(sample, c, sn) == s) ++on_edge;
      if (distance_sum(ExactReal(BigRational(1, 2)) * sample, c, sn) < s) ++interior;
      if (distance_sum(ExactReal(BigRational(3, 2)) * sample, c, sn) > s) ++exterior;
    }
  }
  b.exact("edge samples have distance sum s" + where, on_edge == total,
          std::to_string(on_edge) + "/" + std::to_string(total));
  b.exact("interior probes fall short of s" + where, interior == total, std::to_string(interior) + "/" + std::to_string(total));
  b.exact("exterior probes exceed s" + where, exterior == total, std::to_string(exterior) + "/" + std::to_string(total));
  const ExactReal origin_sum = distance_sum({ExactReal(0), ExactReal(0)}, c, sn);
  b.exact("intersection point is excluded" + where, origin_sum.sign() == 0 && origin_sum != s, "sum=0");
  const euclid::Line e12 = euclid::Line::through(v[0], v[1]);
  const euclid::Line e23 = euclid::Line::through(v[1], v[2]);
  b.exact("vertices form a rectangle" + where, euclid::perpendicular(e12, e23) &&
                                                    euclid::distance_sq(v[0], v[2]) == euclid::distance_sq(v[1], v[3]),
          "diagonals equal, adjacent edges perpendicular");
  return b.finish();
}

// ---- p31 ----

P31Instance p31_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 31);
  std::uniform_real_distribution<double> tangent(0.5, 2.0);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::uniform_real_distribution<double> lift(-0.6, 0.6);
  for (int attempt = 0; attempt < 8; ++attempt) {
    P31Instance inst;
    std::array<Eigen::Vector3d, 4> v;
    for (int i = 0; i < 4; ++i) {
      inst.tangent_lengths[i] = tangent(rng);
      const double phi = kPi / 2 * i + jitter(rng);
      Eigen::Vector3d u(std::cos(phi), std::sin(phi), lift(rng));
      v[i] = std::sqrt(1 + inst.tangent_lengths[i] * inst.tangent_lengths[i]) * u.normalized();
    }
    int iterations = 0;
    if (!solve_closure(v, inst.tangent_lengths, iterations)) continue;
    for (int i = 0; i < 4; ++i) inst.vertices[i] = pt(v[i]);
    inst.iterations = iterations;
    finish_instance(inst);
    if (inst.residual < tolerance::kSolverResidual && inst.vertex_defect > 1e-3) return inst;
  }
  throw GenerationFailed("closure solve did not converge for seed " + std::to_string(seed));
}

P31Instance p31_planar_rhombus() {
  P31Instance inst;
  inst.vertices = {Point3{1, 1, 0}, Point3{-1, 1, 0}, Point3{-1, -1, 0}, Point3{1, -1, 0}};
  inst.tangent_lengths = {1, 1, 1, 1};
  finish_instance(inst);
  return inst;
}

double p31_perturbed_defect(const P31Instance& inst, double angle) {
  const Eigen::Vector3d t0 = vec(inst.tangency[0]);
  const Eigen::Vector3d n =
      (vec(inst.tangency[1]) - t0).cross(vec(inst.tangency[2]) - t0).normalized();
  const Eigen::Vector3d axis = t0.cross(n).normalized();
  const Eigen::Vector3d moved = Eigen::AngleAxisd(angle, axis) * t0;
  auto pts = inst.tangency;
  pts[0] = pt(moved);
  return euclid::coplanarity_defect(pts);
}

VerificationReport verify_p31(std::uint64_t seed) {
  ReportBuilder b("p31", seed);
  const auto flat = p31_planar_rhombus();
  b.numeric("planar square around the equator has defect 0", flat.defect == 0 && flat.residual == 0,
            "defect=" + fmt(flat.defect));
  int coplanar = 0, centroid = 0, sensitive = 0, solved = 0;
  double worst_defect = 0, worst_centroid = 0, worst_residual = 0, least_perturbed = 1e300;
  for (std::uint64_t k = 0; k < 10; ++k) {
    P31Instance inst;
    try {
      inst = p31_instance(seed * 10 + k);
    } catch (const GenerationFailed&) {
      continue;
    }
    ++solved;
    worst_residual = std::max(worst_residual, inst.residual);
    worst_defect = std::max(worst_defect, inst.defect);
    worst_centroid = std::max(worst_centroid, inst.centroid_distance);
    if (inst.defect < tolerance::kGeometry) ++coplanar;
    if (inst.centroid_distance < tolerance::kGeometry) ++centroid;
    const double perturbed = p31_perturbed_defect(inst, 1e-3);
    least_perturbed = std::min(least_perturbed, perturbed);
    if (perturbed > tolerance::kPerturbationFloor) ++sensitive;
  }
  b.numeric("10 non-planar instances solved with residual < 1e-10", solved == 10,
            std::to_string(solved) + "/10, worst residual=" + fmt(worst_residual));
  b.numeric("tangency points coplanar within 1e-9", coplanar == 10,
            std::to_string(coplanar) + "/10, worst defect=" + fmt(worst_defect));
  b.numeric("mass centroid on both tangency diagonals within 1e-9", centroid == 10,
            std::to_string(centroid) + "/10, worst distance=" + fmt(worst_centroid));
  b.numeric("moving one tangency point by 1e-3 raises the defect above 1e-6", sensitive == 10,
            std::to_string(sensitive) + "/10, least=" + fmt(least_perturbed));
  b.headline("max defect " + fmt(worst_defect));
  return b.finish();
}

// ---- p49 ----

P49Result p49_compare(const std::array<BigRational, 4>& sides, int trials, std::uint64_t seed) {
  BigRational total = 0;
  for (const auto& s : sides) {
    if (s <= 0) throw InfeasibleSides("sides must be positive");
    total += s;
  }
  for (const auto& s : sides) {
    if (s >= total - s) throw InfeasibleSides("each side must be shorter than the sum of the others");
  }
  std::array<double, 4> len{};
  for (int i = 0; i < 4; ++i) len[i] = sides[i].convert_to<double>();
  const int longest = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());

  auto central = [](double s, double r) { return 2 * std::asin(std::min(1.0, s / (2 * r))); };
  auto inside_gap = [&](double r) {
    double sum = 0;
    for (double s : len) sum += central(s, r);
    return sum - 2 * kPi;
  };
  auto outside_gap = [&](double r) {
    double sum = 0;
    for (int i = 0; i < 4; ++i) sum += (i == longest ? -1 : 1) * central(len[i], r);
    return sum;
  };
  const double r_min = len[longest] / 2;
  const bool center_inside = inside_gap(r_min) >= 0;
  double lo = r_min, hi = r_min;
  while ((center_inside ? inside_gap(hi) : -outside_gap(hi)) > 0 || hi == lo) hi *= 2;
  for (int k = 0; k < 200 && hi - lo > 1e-12 * hi; ++k) {
    const double mid = (lo + hi) / 2;
    const double g = center_inside ? inside_gap(mid) : -outside_gap(mid);
    (g > 0 ? lo : hi) = mid;
  }
  P49Result out;
  out.circumradius = (lo + hi) / 2;
  const double r = out.circumradius;
  for (int i = 0; i < 4; ++i) {
    const double tri = 0.5 * r * r * std::sin(central(len[i], r));
    out.cyclic_area += (!center_inside && i == longest) ? -tri : tri;
  }
  const double s = (len[0] + len[1] + len[2] + len[3]) / 2;
  out.brahmagupta = std::sqrt((s - len[0]) * (s - len[1]) * (s - len[2]) * (s - len[3]));

  // Hinge at B: sides a = AB, b = BC, diagonal e = AC, then c = CD, d = DA.
  std::mt19937_64 rng(seed ^ 0x49);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  const double a = len[0], bb = len[1], c = len[2], d = len[3];
  long attempts = 0;
  while (out.trials < trials && attempts < 1000L * trials) {
    ++attempts;
    const double beta = angle(rng);
    const double e = std::sqrt(a * a + bb * bb - 2 * a * bb * std::cos(beta));
    if (e <= std::abs(c - d) || e >= c + d) continue;
    ++out.trials;
    const double area = 0.5 * a * bb * std::sin(beta) + heron(c, d, e);
    out.max_sampled = std::max(out.max_sampled, area);
    if (area > out.cyclic_area + tolerance::kGeometry) ++out.violations;
  }
  return out;
}

VerificationReport verify_p49(std::uint64_t seed) {
  ReportBuilder b("p49", seed);
  const auto square = p49_compare({1, 1, 1, 1}, 1000, seed);
  b.numeric("sides (1,1,1,1): cyclic area 1", std::abs(square.cyclic_area - 1) < tolerance::kGeometry,
            "area=" + fmt(square.cyclic_area));
  const auto rect = p49_compare({3, 4, 3, 4}, 1000, seed);
  b.numeric("sides (3,4,3,4): cyclic area 12", std::abs(rect.cyclic_area - 12) < tolerance::kGeometry,
            "area=" + fmt(rect.cyclic_area));
  const auto main = p49_compare({2, 3, 4, 5}, 10000, seed);
  b.numeric("sides (2,3,4,5): bisected cyclic area matches Brahmagupta",
            std::abs(main.cyclic_area - main.brahmagupta) < tolerance::kGeometry,
            "cyclic=" + fmt(main.cyclic_area) + " brahmagupta=" + fmt(main.brahmagupta));
  b.numeric("sides (2,3,4,5): no hinge sample exceeds the cyclic area", main.trials == 10000 && main.violations == 0,
            std::to_string(main.trials) + " samples, max=" + fmt(main.max_sampled));
  const auto skew = p49_compare({1, 1, 1, BigRational(5, 2)}, 10000, seed);
  b.numeric("sides (1,1,1,5/2): center outside, area matches Brahmagupta",
            std::abs(skew.cyclic_area - skew.brahmagupta) < tolerance::kGeometry && skew.violations == 0,
            "cyclic=" + fmt(skew.cyclic_area) + " brahmagupta=" + fmt(skew.brahmagupta));
  b.headline("cyclic area " + fmt(main.cyclic_area) + " for (2,3,4,5)");
  return b.finish();
}

}  // namespace coffin::problems
