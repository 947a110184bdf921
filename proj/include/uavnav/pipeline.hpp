#pragma once

#include <string>
#include <vector>

#include "uavnav/config.hpp"
#include "uavnav/evaluation.hpp"
#include "uavnav/scene.hpp"
#include "uavnav/trajectory.hpp"

namespace uavnav {

// Canonical artifact locations inside a run's output directory.
struct PipelinePaths {
  std::string out_dir;

  std::string train_scenes() const { return out_dir + "/scenes_train.json"; }
  std::string eval_scenes() const { return out_dir + "/scenes_eval.json"; }
  std::string raw_trajectories() const { return out_dir + "/trajectories_raw.jsonl"; }
  std::string curated_trajectories() const { return out_dir + "/trajectories_curated.jsonl"; }
  std::string filter_report() const { return out_dir + "/filter_report.json"; }
  std::string model() const { return out_dir + "/model.json"; }
  std::string train_log() const { return out_dir + "/train_log.json"; }
  std::string results_csv() const { return out_dir + "/results.csv"; }
  std::string summary() const { return out_dir + "/summary.json"; }
  std::string plots_dir() const { return out_dir + "/plots"; }
};

// Generate every scene of a set, in seed order.
std::vector<Scene> build_scene_set(const SceneSetConfig& set, const GenerationParams& base);

// Record the delay-wrapped expert once per scene, in seed order.
std::vector<Trajectory> record_expert_set(const RunConfig& config,
                                          const std::vector<Scene>& scenes);

// Stage functions: file-in, file-out, deterministic for a fixed config.
void run_gen_scenes(const RunConfig& config);
void run_record(const RunConfig& config);
void run_curate(const RunConfig& config);
void run_train(const RunConfig& config);

// policy: "bc" (default; reads the trained model), "expert", "random",
// or "no-stop" (expert with landing disabled).
MetricsSummary run_eval(const RunConfig& config, const std::string& policy = "bc");

void run_plot(const RunConfig& config, const std::string& scenes_path,
              const std::string& trajectories_path, const std::string& plot_dir);

// Dump the composite observation for one seed at the scene's start pose.
void run_mosaic(const RunConfig& config, std::uint64_t seed, const std::string& dir);

// gen-scenes, record, curate, train, eval in sequence.
MetricsSummary run_all(const RunConfig& config);

}  // namespace uavnav
