// Minimal 2D vector math for the risk-field grid computations.
#ifndef RISKFIELD_GEOMETRY_HPP_
#define RISKFIELD_GEOMETRY_HPP_

#include <cmath>

namespace riskfield {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Counterclockwise rotation by theta radians.
inline Vec2 rotated_ccw(Vec2 v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Heading unit vector for a yaw angle. Yaw 0 points along +y (the road's
// longitudinal axis); positive yaw tilts the heading toward +x.
inline Vec2 heading_vector(double yaw) { return {std::sin(yaw), std::cos(yaw)}; }

}  // namespace riskfield

#endif  // RISKFIELD_GEOMETRY_HPP_
