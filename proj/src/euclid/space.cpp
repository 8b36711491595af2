#include "coffin/euclid/space.hpp"

#include <cmath>
#include <stdexcept>

namespace coffin::euclid {

Point3 operator+(const Point3& p, const Point3& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
Point3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
Point3 operator*(double k, const Point3& p) { return {k * p.x, k * p.y, k * p.z}; }
double dot(const Point3& p, const Point3& q) { return p.x * q.x + p.y * q.y + p.z * q.z; }
Point3 cross(const Point3& p, const Point3& q) {
  return {p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}
double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

double coplanarity_defect(const std::array<Point3, 4>& points) {
  for (const auto& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      throw std::invalid_argument("coplanarity_defect needs finite coordinates");
  double log_sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      double d = norm(points[i] - points[j]);
      if (d == 0.0) return 0.0;
      log_sum += std::log(d);
    }
  }
  double mean = std::exp(log_sum / 6.0);
  // The homogeneous determinant equals the triple product of edge vectors.
  Point3 u = points[1] - points[0];
  Point3 v = points[2] - points[0];
  Point3 w = points[3] - points[0];
  double det = dot(u, cross(v, w));
  return std::abs(det) / (mean * mean * mean);
}

double distance_to_line(const Point3& p, const Point3& a, const Point3& b) {
  Point3 d = b - a;
  double len = norm(d);
  if (len == 0.0) return norm(p - a);
  return norm(cross(p - a, d)) / len;
}

}  // namespace coffin::euclid
