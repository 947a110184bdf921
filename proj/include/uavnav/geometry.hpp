#pragma once

#include <cmath>
#include <stdexcept>

namespace uavnav {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Minimal 3D vector in the world frame (meters, z up).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  bool operator==(const Vec3& o) const = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }

/// UAV world state: 3D position plus yaw. Yaw is measured counterclockwise
/// from the +x axis and is kept normalized into (-pi, pi].
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double yaw = 0.0;

  Vec3 position() const { return {x, y, z}; }
  bool operator==(const Pose& o) const = default;
};

/// Bearing of the target relative to the agent heading.
/// Positive theta means the target lies to the agent's RIGHT.
struct RelativeBearing {
  double theta = 0.0;
};

// Normalize an angle into (-pi, pi]. Throws on non-finite input.
double wrap_angle(double a);

// Bearing of (tx, ty) relative to the pose heading, positive = right.
// Throws if the target sits exactly at the pose's horizontal position.
RelativeBearing relative_bearing(const Pose& pose, double tx, double ty);

inline RelativeBearing relative_bearing(const Pose& pose, const Vec3& target) {
  return relative_bearing(pose, target.x, target.y);
}

// Euclidean distance in the xy-plane.
double horizontal_distance(const Pose& pose, const Vec3& target);

}  // namespace uavnav
