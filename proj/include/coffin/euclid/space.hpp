#pragma once

#include <array>

namespace coffin::euclid {

/// Double-precision 3-D point; used only for the space-quadrilateral checks.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

Point3 operator+(const Point3& p, const Point3& q);
Point3 operator-(const Point3& p, const Point3& q);
Point3 operator*(double k, const Point3& p);
double dot(const Point3& p, const Point3& q);
Point3 cross(const Point3& p, const Point3& q);
double norm(const Point3& p);

/// |det| of the 4×4 homogeneous matrix of the points divided by g³, where g
/// is the geometric mean of the six pairwise distances. Dimensionless and
/// zero exactly when the points are coplanar (or two of them coincide).
double coplanarity_defect(const std::array<Point3, 4>& points);

/// Distance from p to the line through a and b.
double distance_to_line(const Point3& p, const Point3& a, const Point3& b);

}  // namespace coffin::euclid
