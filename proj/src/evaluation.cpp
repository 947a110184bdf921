#include "uavnav/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavnav {
namespace {

double distance_to_target(const Pose& pose, const Vec3& target) {
  return (pose.position() - target).norm();
}

MetricsGroup fold(const std::vector<const EpisodeResult*>& results) {
  MetricsGroup g;
  g.n = static_cast<int>(results.size());
  double sr = 0.0, osr = 0.0, spl = 0.0, ne = 0.0;
  for (const EpisodeResult* r : results) {
    sr += r->success ? 1.0 : 0.0;
    osr += r->oracle_success ? 1.0 : 0.0;
    spl += r->spl_term;
    ne += r->ne;
  }
  const double n = static_cast<double>(g.n);
  g.sr = 100.0 * sr / n;
  g.osr = 100.0 * osr / n;
  g.spl = 100.0 * spl / n;
  g.mean_ne = ne / n;
  return g;
}

}  // namespace

EpisodeResult score_episode(const Trajectory& traj, const Scene& scene) {
  if (traj.frames.empty()) {
    throw std::invalid_argument("score_episode: empty trajectory");
  }
  if (traj.seed != scene.seed) {
    throw std::invalid_argument("score_episode: trajectory/scene seed mismatch");
  }

  EpisodeResult r;
  r.seed = traj.seed;
  r.difficulty = scene.difficulty;
  r.status = traj.status;
  r.steps = static_cast<int>(traj.frames.size());
  r.ne = distance_to_target(traj.final_pose, scene.target);
  r.success = traj.status == EpisodeStatus::kLanded && r.ne <= kSuccessRadius;

  double closest = r.ne;
  double path = 0.0;
  for (std::size_t i = 0; i < traj.frames.size(); ++i) {
    closest = std::min(closest, distance_to_target(traj.frames[i].pose, scene.target));
    const Vec3 from = traj.frames[i].pose.position();
    const Vec3 to = i + 1 < traj.frames.size() ? traj.frames[i + 1].pose.position()
                                               : traj.final_pose.position();
    path += (to - from).norm();
  }
  r.oracle_success = closest <= kSuccessRadius;
  r.path_length = path;
  r.shortest_path = (scene.target - scene.start.position()).norm();
  r.spl_term = r.success ? r.shortest_path / std::max(r.path_length, r.shortest_path) : 0.0;
  return r;
}

MetricsSummary summarize(const std::vector<EpisodeResult>& results) {
  if (results.empty()) {
    throw std::invalid_argument("summarize: no episode results");
  }
  MetricsSummary summary;
  std::vector<const EpisodeResult*> all;
  std::map<std::string, std::vector<const EpisodeResult*>> groups;
  all.reserve(results.size());
  for (const EpisodeResult& r : results) {
    all.push_back(&r);
    groups[std::string(difficulty_name(r.difficulty))].push_back(&r);
  }
  summary.overall = fold(all);
  for (const auto& [name, group] : groups) {
    summary.per_difficulty[name] = fold(group);
  }
  return summary;
}

}  // namespace uavnav
