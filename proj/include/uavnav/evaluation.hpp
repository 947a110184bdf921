#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uavnav/scene.hpp"
#include "uavnav/trajectory.hpp"

namespace uavnav {

struct EpisodeResult {
  std::uint64_t seed = 0;
  Difficulty difficulty = Difficulty::kEasy;
  EpisodeStatus status = EpisodeStatus::kTimeout;
  double ne = 0.0;             // 3D distance from the final pose to the target
  bool success = false;        // landed AND ne <= 20 m
  bool oracle_success = false; // came within 20 m of the target at any point
  double path_length = 0.0;    // sum of per-step 3D displacements
  double shortest_path = 0.0;  // straight-line start-to-target distance
  double spl_term = 0.0;       // success * shortest / max(path, shortest)
  int steps = 0;
};

struct MetricsGroup {
  int n = 0;
  double sr = 0.0;       // percent
  double osr = 0.0;      // percent
  double spl = 0.0;      // percent
  double mean_ne = 0.0;  // meters
};

struct MetricsSummary {
  MetricsGroup overall;
  std::map<std::string, MetricsGroup> per_difficulty;  // keyed "easy"/"hard"
};

inline constexpr double kSuccessRadius = 20.0;

EpisodeResult score_episode(const Trajectory& traj, const Scene& scene);
MetricsSummary summarize(const std::vector<EpisodeResult>& results);

}  // namespace uavnav
