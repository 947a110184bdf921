#include "uavnav/pipeline.hpp"

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "uavnav/bc_policy.hpp"
#include "uavnav/mosaic.hpp"
#include "uavnav/serialization.hpp"
#include "uavnav/svg_plot.hpp"

namespace uavnav {
namespace {

void ensure_dir(const std::string& dir) { std::filesystem::create_directories(dir); }

std::vector<Scene> load_scene_file(const std::string& path) {
  std::vector<Scene> scenes = read_scenes(path);
  if (scenes.empty()) {
    throw std::runtime_error("no scenes in '" + path + "'");
  }
  return scenes;
}

}  // namespace

std::vector<Scene> build_scene_set(const SceneSetConfig& set, const GenerationParams& base) {
  GenerationParams params = base;
  params.force_lateral_start = set.force_lateral_start;
  if (set.obstacle_count_min >= 0) {
    params.obstacle_count_min = set.obstacle_count_min;
    params.obstacle_count_max = set.obstacle_count_max;
  }
  std::vector<Scene> scenes;
  scenes.reserve(static_cast<std::size_t>(set.seeds.count()));
  for (std::uint64_t seed = set.seeds.begin; seed < set.seeds.end; ++seed) {
    scenes.push_back(generate_scene(seed, set_difficulty(set, seed), params));
  }
  return scenes;
}

std::vector<Trajectory> record_expert_set(const RunConfig& config,
                                          const std::vector<Scene>& scenes) {
  std::vector<Trajectory> trajectories;
  trajectories.reserve(scenes.size());
  ExpertPolicy expert(config.expert);
  ReactionDelayPolicy delayed(expert, config.delay_k);
  const RecordOptions options{config.max_steps};
  for (const Scene& scene : scenes) {
    trajectories.push_back(record_episode(scene, delayed, options));
  }
  return trajectories;
}

void run_gen_scenes(const RunConfig& config) {
  const PipelinePaths paths{config.out_dir};
  ensure_dir(config.out_dir);
  write_scenes(paths.train_scenes(), build_scene_set(config.train, config.generation));
  write_scenes(paths.eval_scenes(), build_scene_set(config.eval, config.generation));
}

void run_record(const RunConfig& config) {
  const PipelinePaths paths{config.out_dir};
  ensure_dir(config.out_dir);
  const std::vector<Scene> scenes = load_scene_file(paths.train_scenes());
  write_trajectories(paths.raw_trajectories(), record_expert_set(config, scenes));
}

void run_curate(const RunConfig& config) {
  const PipelinePaths paths{config.out_dir};
  ensure_dir(config.out_dir);
  const std::vector<Trajectory> raw = read_trajectories(paths.raw_trajectories());
  if (config.filter) {
    auto [kept, report] = filter_frames(raw, config.curation);
    write_trajectories(paths.curated_trajectories(), kept);
    atomic_write_text(paths.filter_report(), filter_report_to_json(report).dump(2) + "\n");
  } else {
    FilterReport report;
    for (const Trajectory& t : raw) {
      report.total_frames += t.frames.size();
    }
    write_trajectories(paths.curated_trajectories(), raw);
    atomic_write_text(paths.filter_report(), filter_report_to_json(report).dump(2) + "\n");
  }
}

void run_train(const RunConfig& config) {
  const PipelinePaths paths{config.out_dir};
  ensure_dir(config.out_dir);
  const std::vector<Scene> scenes = load_scene_file(paths.train_scenes());
  const std::vector<Trajectory> data = read_trajectories(paths.curated_trajectories());
  const TabularBcModel model = TabularBcModel::train(data, scenes, config.bc);
  write_model(paths.model(), model);
  ordered_json log;
  log["format_version"] = kFormatVersion;
  log["frames"] = model.frame_count();
  log["training_nll"] = model.nll(data, scenes);
  atomic_write_text(paths.train_log(), log.dump(2) + "\n");
}

MetricsSummary run_eval(const RunConfig& config, const std::string& policy) {
  const PipelinePaths paths{config.out_dir};
  ensure_dir(config.out_dir);
  const std::vector<Scene> scenes = load_scene_file(paths.eval_scenes());

  TabularBcModel model(config.bc);
  ExpertPolicy expert(config.expert);
  NoStopPolicy no_stop(expert);
  RandomPolicy random(0x9e3779b97f4a7c15ULL);
  BackoffMode mode =
      config.ablation == "cold-start" ? BackoffMode::kUniform : BackoffMode::kHintMarginal;

  Policy* chosen = nullptr;
  std::unique_ptr<BcPolicy> bc;
  if (policy == "bc") {
    model = read_model(paths.model());
    bc = std::make_unique<BcPolicy>(model, mode);
    chosen = bc.get();
  } else if (policy == "expert") {
    chosen = &expert;
  } else if (policy == "no-stop") {
    chosen = &no_stop;
  } else if (policy == "random") {
    chosen = &random;
  } else {
    throw std::invalid_argument("unknown eval policy '" + policy + "'");
  }

  const RecordOptions options{config.max_steps};
  std::vector<EpisodeResult> results;
  results.reserve(scenes.size());
  for (const Scene& scene : scenes) {
    const Trajectory traj = record_episode(scene, *chosen, options);
    results.push_back(score_episode(traj, scene));
  }
  const MetricsSummary summary = summarize(results);
  atomic_write_text(paths.results_csv(), results_to_csv(results));
  atomic_write_text(paths.summary(), summary_to_json(summary).dump(2) + "\n");
  return summary;
}

void run_plot(const RunConfig& config, const std::string& scenes_path,
              const std::string& trajectories_path, const std::string& plot_dir) {
  (void)config;
  const std::vector<Scene> scenes = load_scene_file(scenes_path);
  std::unordered_map<std::uint64_t, const Scene*> by_seed;
  for (const Scene& s : scenes) {
    by_seed[s.seed] = &s;
  }
  ensure_dir(plot_dir);
  for (const Trajectory& traj : read_trajectories(trajectories_path)) {
    const auto it = by_seed.find(traj.seed);
    if (it == by_seed.end()) {
      throw std::runtime_error("no scene with seed " + std::to_string(traj.seed) +
                               " for plotting");
    }
    atomic_write_text(plot_dir + "/seed_" + std::to_string(traj.seed) + ".svg",
                      render_trajectory_svg(*it->second, traj));
  }
}

void run_mosaic(const RunConfig& config, std::uint64_t seed, const std::string& dir) {
  GenerationParams params = config.generation;
  const Scene scene = generate_scene(seed, set_difficulty(config.eval, seed), params);
  const ViewGrid front = render_view(scene, scene.start, CameraKind::kFront, 224);
  const ViewGrid down = render_view(scene, scene.start, CameraKind::kDown, 224);
  const CompositeGrid composite = compose(front, down);
  ensure_dir(dir);
  const std::string stem = dir + "/mosaic_seed_" + std::to_string(seed);
  write_depth_pgm(composite, stem + "_depth.pgm");
  write_class_ppm(composite, stem + "_class.ppm");
}

MetricsSummary run_all(const RunConfig& config) {
  run_gen_scenes(config);
  run_record(config);
  run_curate(config);
  run_train(config);
  return run_eval(config);
}

}  // namespace uavnav
