#include "uavnav/action_codec.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace uavnav {
namespace {

int quantize_dim(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi)) {
    char msg[96];
    std::snprintf(msg, sizeof(msg), "quantize: %s=%g outside [%g, %g]", name, v, lo, hi);
    throw std::out_of_range(msg);
  }
  const long c = std::lround((v - lo) * kMaxToken / (hi - lo));
  return static_cast<int>(std::clamp(c, 0L, static_cast<long>(kMaxToken)));
}

// Convex-combination form of lo + c*(hi-lo)/98: endpoints decode exactly and
// the midpoint of a symmetric range decodes to exactly 0.0.
double dequantize_dim(int c, double lo, double hi) {
  return ((kMaxToken - c) * lo + c * hi) / kMaxToken;
}

}  // namespace

ActionTokens ActionTokens::triple(int cx, int cz, int cpsi) {
  for (int c : {cx, cz, cpsi}) {
    if (c < 0 || c > kMaxToken) {
      throw std::out_of_range("ActionTokens: token outside 0..98");
    }
  }
  ActionTokens t;
  t.codes_ = {cx, cz, cpsi};
  return t;
}

const std::array<int, 3>& ActionTokens::codes() const {
  if (!codes_) {
    throw std::logic_error("ActionTokens: LAND marker has no token triple");
  }
  return *codes_;
}

std::string ActionTokens::serialize() const {
  if (is_land()) {
    return "LAND";
  }
  return std::to_string(cx()) + " " + std::to_string(cz()) + " " + std::to_string(cpsi());
}

ActionTokens ActionTokens::parse(const std::string& text) {
  if (text == "LAND") {
    return land();
  }
  int cx = -1, cz = -1, cpsi = -1;
  char trail = 0;
  if (std::sscanf(text.c_str(), "%d %d %d %c", &cx, &cz, &cpsi, &trail) != 3) {
    throw std::invalid_argument("ActionTokens: cannot parse '" + text + "'");
  }
  return triple(cx, cz, cpsi);
}

ActionTokens quantize(const Action& a) {
  return ActionTokens::triple(quantize_dim(a.dx, kDxLo, kDxHi, "dx"),
                              quantize_dim(a.dz, kDzLo, kDzHi, "dz"),
                              quantize_dim(a.dpsi, kDpsiLo, kDpsiHi, "dpsi"));
}

Action dequantize(const ActionTokens& t) {
  if (t.is_land()) {
    throw std::invalid_argument("dequantize: LAND has no kinematic decode");
  }
  return Action{dequantize_dim(t.cx(), kDxLo, kDxHi),
                dequantize_dim(t.cz(), kDzLo, kDzHi),
                dequantize_dim(t.cpsi(), kDpsiLo, kDpsiHi)};
}

bool is_landing(const ActionTokens& t) {
  if (t.is_land()) {
    return true;
  }
  // "Within one bin of zero" per dimension. The decode is linear, so
  // |decoded| <= bin_width is exactly a token-space check against the token
  // that decodes to zero (0 for dx, 49 for the symmetric dimensions).
  return t.cx() <= 1 && std::abs(t.cz() - 49) <= 1 && std::abs(t.cpsi() - 49) <= 1;
}

VelocityCommand to_velocity(const Action& a, const Pose& pose) {
  VelocityCommand cmd;
  cmd.yaw_target = wrap_angle(pose.yaw + a.dpsi);
  cmd.duration = std::sqrt(a.dx * a.dx + a.dz * a.dz);
  if (cmd.duration > 0.0) {
    // Unit cruise speed: direction has norm == duration by construction.
    cmd.vx = a.dx * std::cos(cmd.yaw_target) / cmd.duration;
    cmd.vy = a.dx * std::sin(cmd.yaw_target) / cmd.duration;
    cmd.vz = a.dz / cmd.duration;
  }
  return cmd;
}

}  // namespace uavnav
