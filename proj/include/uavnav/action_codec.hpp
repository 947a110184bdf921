#pragma once

#include <array>
#include <optional>
#include <string>

#include "uavnav/geometry.hpp"

namespace uavnav {

/// Continuous 3-DoF command: forward offset, vertical offset, yaw change.
/// Ranges: dx in [0, 5] m, dz in [-5, 5] m, dpsi in [-pi, pi] rad.
struct Action {
  double dx = 0.0;
  double dz = 0.0;
  double dpsi = 0.0;
};

inline constexpr int kNumBins = 99;
inline constexpr int kMaxToken = kNumBins - 1;  // tokens run 0..98

inline constexpr double kDxLo = 0.0, kDxHi = 5.0;
inline constexpr double kDzLo = -5.0, kDzHi = 5.0;
inline constexpr double kDpsiLo = -kPi, kDpsiHi = kPi;

/// Discrete action label: either the LAND marker or a token triple
/// (cx, cz, cpsi), each in 0..98. The two are mutually exclusive.
class ActionTokens {
 public:
  static ActionTokens land() { return ActionTokens{}; }
  static ActionTokens triple(int cx, int cz, int cpsi);

  bool is_land() const { return !codes_.has_value(); }
  const std::array<int, 3>& codes() const;

  int cx() const { return codes()[0]; }
  int cz() const { return codes()[1]; }
  int cpsi() const { return codes()[2]; }

  bool operator==(const ActionTokens& o) const = default;

  /// Wire form: "LAND" or three space-separated integers, e.g. "3 49 61".
  std::string serialize() const;
  static ActionTokens parse(const std::string& text);

 private:
  ActionTokens() = default;
  std::optional<std::array<int, 3>> codes_;
};

/// Constant-cruise velocity command derived from an action offset.
/// Speed is exactly 1.0 m/s whenever duration > 0.
struct VelocityCommand {
  double vx = 0.0;
  double vy = 0.0;
  double vz = 0.0;
  double yaw_target = 0.0;
  double duration = 0.0;
};

// Quantize a continuous action onto the 99-bin endpoint-inclusive grid.
// Out-of-range components throw; callers must clamp labels explicitly.
ActionTokens quantize(const Action& a);

// Decode a token triple back to a continuous action. The grid is
// endpoint-inclusive, so tokens 0/98 decode to the exact range endpoints and
// the midpoint token of a symmetric range decodes to exactly zero.
// Throws when given the LAND marker.
Action dequantize(const ActionTokens& t);

// Dual-condition landing check: the LAND marker, or a triple whose decoded
// offsets are all within one bin of zero.
bool is_landing(const ActionTokens& t);

// Map an action to a world-frame velocity command at constant 1.0 m/s cruise
// speed; duration = sqrt(dx^2 + dz^2). Yaw is applied before the translation
// direction is computed.
VelocityCommand to_velocity(const Action& a, const Pose& pose);

}  // namespace uavnav
