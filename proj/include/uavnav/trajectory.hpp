#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavnav/action_codec.hpp"
#include "uavnav/policy.hpp"
#include "uavnav/prompt.hpp"
#include "uavnav/scene.hpp"

namespace uavnav {

// One control step as recorded for training: the observation, the prompt that
// would condition a language policy, and the tokenized action label.
struct Frame {
  int step = 0;
  Pose pose;
  double theta = 0.0;
  FuzzyHint hint = FuzzyHint::kStraightAhead;
  std::string prompt;
  DepthProbe depth;
  ActionTokens action_label = ActionTokens::land();
  Action raw_action;        // zero when the label is LAND
  bool land_label = false;  // true iff action_label is LAND
  bool delay_injected = false;
};

enum class EpisodeStatus { kLanded, kCollided, kTimeout };

std::string_view status_name(EpisodeStatus status);
EpisodeStatus status_from_name(std::string_view name);

struct Trajectory {
  std::uint64_t seed = 0;
  std::vector<Frame> frames;
  EpisodeStatus status = EpisodeStatus::kTimeout;
  Pose final_pose;
};

struct RecordOptions {
  int max_steps = 200;
  // Execute the policy's continuous action instead of the decoded label.
  // Labels are still quantized; replay fidelity only holds when this is off.
  // Used to measure how much the codec costs a policy.
  bool execute_raw = false;
};

// Closed loop: probe -> bearing -> hint -> prompt -> policy -> quantize ->
// step. The executed motion is the decoded label, so every recorded pose is
// exactly reproducible from the token stream. The episode ends landed when
// the policy emits LAND or the label decodes to near-zero offsets (intrinsic
// stop), collided when a step hits something, else timeout at max_steps.
Trajectory record_episode(const Scene& scene, Policy& policy, const RecordOptions& options = {});

}  // namespace uavnav
