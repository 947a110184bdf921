#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uavnav/bc_policy.hpp"
#include "uavnav/curation.hpp"
#include "uavnav/evaluation.hpp"
#include "uavnav/scene.hpp"
#include "uavnav/trajectory.hpp"

namespace uavnav {

// All artifacts carry this so readers can reject files from other layouts.
inline constexpr int kFormatVersion = 1;

using ordered_json = nlohmann::ordered_json;

ordered_json scene_to_json(const Scene& scene);
Scene scene_from_json(const ordered_json& j);

ordered_json trajectory_to_json(const Trajectory& traj);
Trajectory trajectory_from_json(const ordered_json& j);

ordered_json model_to_json(const TabularBcModel& model);
TabularBcModel model_from_json(const ordered_json& j);

ordered_json filter_report_to_json(const FilterReport& report);
ordered_json summary_to_json(const MetricsSummary& summary);

// One row per episode: seed,difficulty,status,ne,success,oracle_success,
// path_length,shortest_path,spl_term,steps. Booleans as 0/1; doubles in
// shortest round-trip form.
std::string results_to_csv(const std::vector<EpisodeResult>& results);

// File IO. Writers stage to "<path>.partial" and rename, so a crash never
// leaves a half-written artifact under the final name.
void atomic_write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

void write_scenes(const std::string& path, const std::vector<Scene>& scenes);
std::vector<Scene> read_scenes(const std::string& path);

// Trajectories as JSONL: one trajectory object per line.
void write_trajectories(const std::string& path, const std::vector<Trajectory>& trajectories);
std::vector<Trajectory> read_trajectories(const std::string& path);

void write_model(const std::string& path, const TabularBcModel& model);
TabularBcModel read_model(const std::string& path);

}  // namespace uavnav
