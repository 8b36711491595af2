#pragma once

#include <array>
#include <cstdint>

#include "coffin/euclid/plane.hpp"
#include "coffin/euclid/space.hpp"
#include "coffin/exactnum/exact_real.hpp"
#include "coffin/problems/report.hpp"

namespace coffin::problems {

using exactnum::BigRational;
using exactnum::ExactReal;

class DegenerateLines : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleSides : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Angles (degrees) of the triangle with sides AO, BO, CO, opposite BO, CO
/// and AO respectively, for ∠BOC = x and ∠AOC = y. Throws DomainError unless
/// 60 < x, y < 180 and 180 < x + y < 300.
std::array<BigRational, 3> p26_angles(const BigRational& x_deg, const BigRational& y_deg);

struct P26Reconstruction {
  /// Angles of triangle COO' at O, O' and C, measured after rotating about A.
  std::array<double, 3> rotated;
  /// Angles opposite BO, CO, AO from the law of cosines.
  std::array<double, 3> law_of_cosines;
  /// ∠BOC and ∠AOC measured at the placed point.
  double measured_x = 0;
  double measured_y = 0;
  bool inside = false;
};
P26Reconstruction p26_reconstruct(double x_deg, double y_deg);
VerificationReport verify_p26(std::uint64_t seed);

/// Vertices of the locus rectangle for the x-axis and the line through the
/// origin at `angle_deg`, in cyclic order. The angle must be a multiple of 15.
std::array<euclid::Point, 4> p30_vertices(const BigRational& angle_deg, const ExactReal& s);
VerificationReport p30_locus_check(const BigRational& angle_deg, const ExactReal& s, int sample_count);

struct P31Instance {
  std::array<euclid::Point3, 4> vertices;
  std::array<euclid::Point3, 4> tangency;
  std::array<double, 4> tangent_lengths{};
  double residual = 0;
  int iterations = 0;
  double vertex_defect = 0;
  double defect = 0;
  /// Largest distance from the mass centroid to the two tangency diagonals.
  double centroid_distance = 0;
};
/// Throws GenerationFailed when the closure solve does not converge.
P31Instance p31_instance(std::uint64_t seed);
/// Square around the equator of the unit sphere.
P31Instance p31_planar_rhombus();
/// Defect after rotating the first tangency point by `angle` radians along
/// the sphere.
double p31_perturbed_defect(const P31Instance& instance, double angle);
VerificationReport verify_p31(std::uint64_t seed);

struct P49Result {
  double circumradius = 0;
  double cyclic_area = 0;
  double brahmagupta = 0;
  double max_sampled = 0;
  int trials = 0;
  int violations = 0;
};
P49Result p49_compare(const std::array<BigRational, 4>& sides, int trials, std::uint64_t seed);
VerificationReport verify_p49(std::uint64_t seed);

}  // namespace coffin::problems
