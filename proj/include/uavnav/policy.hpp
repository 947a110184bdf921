#pragma once

#include "uavnav/action_codec.hpp"
#include "uavnav/geometry.hpp"
#include "uavnav/prompt.hpp"
#include "uavnav/rng.hpp"
#include "uavnav/scene.hpp"

namespace uavnav {

// Everything a policy sees at one step of the control loop.
struct Observation {
  Pose pose;
  RelativeBearing theta;
  FuzzyHint hint = FuzzyHint::kStraightAhead;
  DepthProbe depth;
};

// A policy either asks to land or proposes a continuous action. The recorder
// quantizes the action; the executed motion is its decoded form.
struct PolicyDecision {
  bool land = false;
  Action raw;
  bool delay_adjusted = false;  // set by the reaction-delay wrapper
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual void begin_episode(const Scene& scene) { (void)scene; }
  virtual PolicyDecision decide(const Scene& scene, const Observation& obs) = 0;
};

struct ExpertParams {
  double hover_offset = 5.0;             // cruise altitude above the target
  double land_radius = 3.0;              // horizontal distance gate for landing
  double land_altitude_tolerance = 1.0;  // vertical gate for landing
  double evasion_trigger_depth = 12.0;   // forward clearance that forces evasion
  double max_turn = kPi / 4.0;           // per-step yaw cap

  bool operator==(const ExpertParams&) const = default;
};

// Scripted pilot: turn toward the target (capped), cruise at hover altitude,
// sidestep when the forward ray is blocked, land when aligned over the target.
class ExpertPolicy : public Policy {
 public:
  explicit ExpertPolicy(const ExpertParams& params = {}) : params_(params) {}
  PolicyDecision decide(const Scene& scene, const Observation& obs) override;
  const ExpertParams& params() const { return params_; }

 private:
  ExpertParams params_;
};

// Wrapper that imitates a sluggish pilot: for the first k frames after the
// bearing enters a lateral bucket (|theta| > 60 deg), the yaw command is
// zeroed while dx and dz pass through. Modified frames are flagged so tests
// can compare the curation filter against ground truth.
class ReactionDelayPolicy : public Policy {
 public:
  ReactionDelayPolicy(Policy& inner, int k);
  void begin_episode(const Scene& scene) override;
  PolicyDecision decide(const Scene& scene, const Observation& obs) override;

 private:
  Policy* inner_;
  int k_;
  int lateral_run_ = 0;
};

// Wrapper that refuses to terminate: every landing request from the inner
// policy becomes an in-place yaw spin, so the episode can only time out or
// collide. Used to expose the gap between reaching a target and stopping there.
class NoStopPolicy : public Policy {
 public:
  explicit NoStopPolicy(Policy& inner) : inner_(&inner) {}
  void begin_episode(const Scene& scene) override { inner_->begin_episode(scene); }
  PolicyDecision decide(const Scene& scene, const Observation& obs) override;

 private:
  Policy* inner_;
};

// Uniform random token in each action dimension, seeded per episode.
class RandomPolicy : public Policy {
 public:
  explicit RandomPolicy(std::uint64_t seed) : base_seed_(seed), rng_(seed) {}
  void begin_episode(const Scene& scene) override;
  PolicyDecision decide(const Scene& scene, const Observation& obs) override;

 private:
  std::uint64_t base_seed_;
  Rng rng_;
};

// Same continuous action every step.
class FixedPolicy : public Policy {
 public:
  explicit FixedPolicy(const Action& action) : action_(action) {}
  PolicyDecision decide(const Scene& scene, const Observation& obs) override {
    (void)scene;
    (void)obs;
    return {false, action_, false};
  }

 private:
  Action action_;
};

}  // namespace uavnav
