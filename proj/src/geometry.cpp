#include "uavnav/geometry.hpp"

namespace uavnav {

double wrap_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("wrap_angle: non-finite angle");
  }
  // std::remainder returns a value in [-pi, pi]; fold the open endpoint.
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) {
    r += kTwoPi;
  }
  return r;
}

RelativeBearing relative_bearing(const Pose& pose, double tx, double ty) {
  const double dx = tx - pose.x;
  const double dy = ty - pose.y;
  if (dx == 0.0 && dy == 0.0) {
    throw std::domain_error("relative_bearing: target at zero horizontal separation");
  }
  const double world_bearing = std::atan2(dy, dx);
  return RelativeBearing{wrap_angle(-(world_bearing - pose.yaw))};
}

double horizontal_distance(const Pose& pose, const Vec3& target) {
  return std::hypot(target.x - pose.x, target.y - pose.y);
}

}  // namespace uavnav
