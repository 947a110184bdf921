#include "uavnav/curation.hpp"

#include <cmath>

namespace uavnav {

bool frame_is_ambiguous(const Frame& frame, const CurationParams& params) {
  if (frame.land_label) {
    return false;
  }
  if (std::abs(frame.theta) <= deg2rad(params.lateral_bearing_deg)) {
    return false;
  }
  return std::abs(frame.action_label.cpsi() - 49) <= 1;
}

std::pair<std::vector<Trajectory>, FilterReport> filter_frames(
    const std::vector<Trajectory>& trajectories, const CurationParams& params) {
  std::vector<Trajectory> kept;
  kept.reserve(trajectories.size());
  FilterReport report;

  for (const Trajectory& traj : trajectories) {
    Trajectory out;
    out.seed = traj.seed;
    out.status = traj.status;
    out.final_pose = traj.final_pose;
    out.frames.reserve(traj.frames.size());
    for (const Frame& frame : traj.frames) {
      ++report.total_frames;
      if (!frame_is_ambiguous(frame, params)) {
        out.frames.push_back(frame);
        continue;
      }
      ++report.inspected;
      const double side_depth = frame.theta > 0.0 ? frame.depth.right : frame.depth.left;
      if (side_depth > params.clear_depth) {
        ++report.discarded;
      } else {
        ++report.retained_evasions;
        out.frames.push_back(frame);
      }
    }
    kept.push_back(std::move(out));
  }

  report.discard_fraction =
      report.total_frames == 0 ? 0.0
                               : static_cast<double>(report.discarded) / report.total_frames;
  return {std::move(kept), report};
}

}  // namespace uavnav
