#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "uavnav/trajectory.hpp"

namespace uavnav {

struct CurationParams {
  double lateral_bearing_deg = 60.0;  // |theta| beyond this is a lateral frame
  double clear_depth = 20.0;          // target-side depth beyond this means clear space

  bool operator==(const CurationParams&) const = default;
};

struct FilterReport {
  std::size_t total_frames = 0;
  std::size_t inspected = 0;          // frames matching the ambiguity predicate
  std::size_t discarded = 0;
  std::size_t retained_evasions = 0;  // inspected but kept: side space was occupied
  double discard_fraction = 0.0;
};

// A frame is ambiguous when the target sits laterally (|theta| > 60 deg) yet
// the yaw label is within one token of zero: the pilot flew straight although
// the instruction pointed sideways. LAND frames are never ambiguous. The
// token-space check |cpsi - 49| <= 1 is exactly the decoded one-bin yaw bound.
bool frame_is_ambiguous(const Frame& frame, const CurationParams& params = {});

// Drop every ambiguous frame whose target-side lateral depth exceeds
// clear_depth (straight flight with open side space teaches the wrong thing);
// keep the rest as genuine evasion maneuvers. Trajectory structure, status and
// final pose are preserved; only frames are removed.
std::pair<std::vector<Trajectory>, FilterReport> filter_frames(
    const std::vector<Trajectory>& trajectories, const CurationParams& params = {});

}  // namespace uavnav
