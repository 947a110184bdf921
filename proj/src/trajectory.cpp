#include "uavnav/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace uavnav {

std::string_view status_name(EpisodeStatus status) {
  switch (status) {
    case EpisodeStatus::kLanded:
      return "landed";
    case EpisodeStatus::kCollided:
      return "collided";
    case EpisodeStatus::kTimeout:
      return "timeout";
  }
  throw std::logic_error("unreachable");
}

EpisodeStatus status_from_name(std::string_view name) {
  if (name == "landed") return EpisodeStatus::kLanded;
  if (name == "collided") return EpisodeStatus::kCollided;
  if (name == "timeout") return EpisodeStatus::kTimeout;
  throw std::invalid_argument("unknown episode status '" + std::string(name) + "'");
}

Trajectory record_episode(const Scene& scene, Policy& policy, const RecordOptions& options) {
  if (options.max_steps < 1) {
    throw std::invalid_argument("record_episode: max_steps must be >= 1");
  }

  Trajectory traj;
  traj.seed = scene.seed;
  traj.status = EpisodeStatus::kTimeout;

  Pose pose = scene.start;
  policy.begin_episode(scene);

  for (int i = 0; i < options.max_steps; ++i) {
    Observation obs;
    obs.pose = pose;
    obs.depth = probe_depth(scene, pose);
    if (horizontal_distance(pose, scene.target) > 0.0) {
      obs.theta = relative_bearing(pose, scene.target.x, scene.target.y);
    } else {
      obs.theta = RelativeBearing{0.0};  // directly above the target
    }
    obs.hint = fuzzy_hint(obs.theta);

    Frame frame;
    frame.step = i;
    frame.pose = pose;
    frame.theta = obs.theta.theta;
    frame.hint = obs.hint;
    frame.prompt = build_prompt(obs.hint, scene.target_description);
    frame.depth = obs.depth;

    const PolicyDecision decision = policy.decide(scene, obs);
    if (decision.land) {
      frame.action_label = ActionTokens::land();
      frame.land_label = true;
      traj.frames.push_back(std::move(frame));
      traj.status = EpisodeStatus::kLanded;
      break;
    }

    frame.action_label = quantize(decision.raw);
    frame.raw_action = decision.raw;
    frame.delay_injected = decision.delay_adjusted;
    const ActionTokens label = frame.action_label;
    const Action frame_raw = decision.raw;
    traj.frames.push_back(std::move(frame));

    if (is_landing(label)) {
      // Near-zero offsets trigger the intrinsic stop without moving.
      traj.status = EpisodeStatus::kLanded;
      break;
    }

    const StepResult result =
        step(scene, pose, options.execute_raw ? frame_raw : dequantize(label));
    pose = result.pose;
    if (result.collided) {
      traj.status = EpisodeStatus::kCollided;
      break;
    }
  }

  traj.final_pose = pose;
  return traj;
}

}  // namespace uavnav
