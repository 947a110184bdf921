#include "uavnav/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavnav {

PolicyDecision ExpertPolicy::decide(const Scene& scene, const Observation& obs) {
  const double hdist = horizontal_distance(obs.pose, scene.target);
  const double cruise_alt = scene.target.z + params_.hover_offset;

  if (hdist <= params_.land_radius &&
      std::abs(obs.pose.z - cruise_alt) <= params_.land_altitude_tolerance) {
    return {true, Action{}, false};
  }

  PolicyDecision d;
  // Positive theta = target to the right = clockwise turn = negative yaw delta.
  d.raw.dpsi = std::clamp(wrap_angle(-obs.theta.theta), -params_.max_turn, params_.max_turn);
  if (obs.depth.forward < params_.evasion_trigger_depth) {
    // Blocked ahead: creep toward the gap and turn away from the nearer side.
    d.raw.dpsi = obs.depth.left < obs.depth.right ? -params_.max_turn : params_.max_turn;
    d.raw.dx = std::max(0.0, std::min(2.0, obs.depth.forward - 2.0));
  } else {
    d.raw.dx = std::min(kDxHi, hdist);
  }
  d.raw.dz = std::clamp(cruise_alt - obs.pose.z, kDzLo, kDzHi);
  return d;
}

ReactionDelayPolicy::ReactionDelayPolicy(Policy& inner, int k) : inner_(&inner), k_(k) {
  if (k < 0) {
    throw std::invalid_argument("reaction delay must be >= 0 frames");
  }
}

void ReactionDelayPolicy::begin_episode(const Scene& scene) {
  lateral_run_ = 0;
  inner_->begin_episode(scene);
}

PolicyDecision ReactionDelayPolicy::decide(const Scene& scene, const Observation& obs) {
  PolicyDecision d = inner_->decide(scene, obs);
  if (std::abs(obs.theta.theta) > deg2rad(60.0)) {
    if (!d.land && lateral_run_ < k_) {
      d.raw.dpsi = 0.0;  // quantizes to the zero-yaw token
      d.delay_adjusted = true;
    }
    ++lateral_run_;
  } else {
    lateral_run_ = 0;
  }
  return d;
}

PolicyDecision NoStopPolicy::decide(const Scene& scene, const Observation& obs) {
  PolicyDecision d = inner_->decide(scene, obs);
  if (d.land) {
    d.land = false;
    d.raw = Action{0.0, 0.0, kPi / 4.0};
    d.delay_adjusted = false;
  }
  return d;
}

void RandomPolicy::begin_episode(const Scene& scene) {
  // Per-episode stream so episodes stay independent of evaluation order.
  rng_ = Rng(base_seed_ ^ scene.seed);
}

PolicyDecision RandomPolicy::decide(const Scene& scene, const Observation& obs) {
  (void)scene;
  (void)obs;
  PolicyDecision d;
  d.raw = dequantize(ActionTokens::triple(rng_.uniform_int(0, kMaxToken),
                                          rng_.uniform_int(0, kMaxToken),
                                          rng_.uniform_int(0, kMaxToken)));
  return d;
}

}  // namespace uavnav
