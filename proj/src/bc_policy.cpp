#include "uavnav/bc_policy.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace uavnav {
namespace {

std::unordered_map<std::uint64_t, const Scene*> index_scenes(const std::vector<Scene>& scenes) {
  std::unordered_map<std::uint64_t, const Scene*> by_seed;
  by_seed.reserve(scenes.size());
  for (const Scene& s : scenes) {
    if (!by_seed.emplace(s.seed, &s).second) {
      throw std::invalid_argument("duplicate scene seed " + std::to_string(s.seed));
    }
  }
  return by_seed;
}

const Scene& scene_for(const std::unordered_map<std::uint64_t, const Scene*>& by_seed,
                       std::uint64_t seed) {
  const auto it = by_seed.find(seed);
  if (it == by_seed.end()) {
    throw std::invalid_argument("no scene with seed " + std::to_string(seed));
  }
  return *it->second;
}

int argmax_token(const std::array<std::uint64_t, kNumBins>& counts) {
  int best = 0;
  for (int t = 1; t < kNumBins; ++t) {
    if (counts[t] > counts[best]) {  // strict: ties stay at the smaller token
      best = t;
    }
  }
  return best;
}

}  // namespace

FeatureKey FeatureKey::from_index(int idx) {
  if (idx < 0 || idx >= kNumFeatureKeys) {
    throw std::out_of_range("feature key index out of range");
  }
  FeatureKey key;
  key.lateral = idx % 2;
  idx /= 2;
  key.forward = idx % 2;
  idx /= 2;
  key.altitude = idx % 3;
  idx /= 3;
  key.distance = idx % 5;
  key.hint = idx / 5;
  return key;
}

FeatureKey featurize(FuzzyHint hint, double horizontal_dist, double altitude_error,
                     double forward_depth, double target_side_depth, const BcParams& params) {
  FeatureKey key;
  key.hint = static_cast<int>(hint);
  if (horizontal_dist < 5.0) {
    key.distance = 0;
  } else if (horizontal_dist < 20.0) {
    key.distance = 1;
  } else if (horizontal_dist < 50.0) {
    key.distance = 2;
  } else if (horizontal_dist < 150.0) {
    key.distance = 3;
  } else {
    key.distance = 4;
  }
  if (altitude_error < -params.level_band) {
    key.altitude = 0;
  } else if (altitude_error > params.level_band) {
    key.altitude = 2;
  } else {
    key.altitude = 1;
  }
  key.forward = forward_depth < params.forward_blocked_depth ? 0 : 1;
  key.lateral = target_side_depth <= params.lateral_clear_depth ? 0 : 1;
  return key;
}

FeatureKey featurize(const Frame& frame, const Scene& scene, const BcParams& params) {
  const double hdist = horizontal_distance(frame.pose, scene.target);
  const double altitude_error = frame.pose.z - (scene.target.z + params.hover_offset);
  // Side toward the target; an exactly-centered bearing reads the right ray.
  const double side_depth = frame.theta >= 0.0 ? frame.depth.right : frame.depth.left;
  return featurize(frame.hint, hdist, altitude_error, frame.depth.forward, side_depth, params);
}

void TabularBcModel::add_frame(const FeatureKey& key, const ActionTokens& label) {
  CellCounts* cells[2] = {&cells_[key.index()],
                          &hint_marginals_[static_cast<std::size_t>(key.hint)]};
  for (CellCounts* cell : cells) {
    if (label.is_land()) {
      ++cell->land;
    } else {
      ++cell->cont;
      ++cell->tokens[0][static_cast<std::size_t>(label.cx())];
      ++cell->tokens[1][static_cast<std::size_t>(label.cz())];
      ++cell->tokens[2][static_cast<std::size_t>(label.cpsi())];
    }
  }
}

TabularBcModel TabularBcModel::train(const std::vector<Trajectory>& data,
                                     const std::vector<Scene>& scenes, const BcParams& params) {
  const auto by_seed = index_scenes(scenes);
  TabularBcModel model(params);
  std::uint64_t frames = 0;
  for (const Trajectory& traj : data) {
    const Scene& scene = scene_for(by_seed, traj.seed);
    for (const Frame& frame : traj.frames) {
      model.add_frame(featurize(frame, scene, params), frame.action_label);
      ++frames;
    }
  }
  if (frames == 0) {
    throw std::invalid_argument("training needs at least one frame");
  }
  return model;
}

const TabularBcModel::CellCounts* TabularBcModel::lookup(const FeatureKey& key) const {
  const auto it = cells_.find(key.index());
  if (it == cells_.end() || it->second.total() == 0) {
    return nullptr;
  }
  return &it->second;
}

ActionTokens TabularBcModel::predict(const FeatureKey& key, BackoffMode mode) const {
  const CellCounts* cell = lookup(key);
  if (cell == nullptr) {
    if (mode == BackoffMode::kUniform) {
      // Every token equally likely; the tie-break picks the lowest one.
      return ActionTokens::triple(0, 0, 0);
    }
    const CellCounts& marginal = hint_marginals_[static_cast<std::size_t>(key.hint)];
    if (marginal.total() == 0) {
      return ActionTokens::triple(0, 0, 0);
    }
    cell = &marginal;
  }
  const double a = params_.alpha;
  const double land_p =
      (static_cast<double>(cell->land) + a) / (static_cast<double>(cell->total()) + 2.0 * a);
  if (land_p > params_.land_threshold) {
    return ActionTokens::land();
  }
  return ActionTokens::triple(argmax_token(cell->tokens[0]), argmax_token(cell->tokens[1]),
                              argmax_token(cell->tokens[2]));
}

double TabularBcModel::frame_nll(const FeatureKey& key, const ActionTokens& label) const {
  const double a = params_.alpha;
  static const CellCounts kEmpty{};
  const CellCounts* cell = lookup(key);
  if (cell == nullptr) {
    cell = &kEmpty;
  }
  const double total = static_cast<double>(cell->total());
  const double land_p = (static_cast<double>(cell->land) + a) / (total + 2.0 * a);
  if (label.is_land()) {
    return -std::log(land_p);
  }
  double nll = -std::log(1.0 - land_p);
  const double denom = static_cast<double>(cell->cont) + a * kNumBins;
  const int codes[3] = {label.cx(), label.cz(), label.cpsi()};
  for (int d = 0; d < 3; ++d) {
    const double p =
        (static_cast<double>(cell->tokens[d][static_cast<std::size_t>(codes[d])]) + a) / denom;
    nll -= std::log(p);
  }
  return nll;
}

double TabularBcModel::nll(const std::vector<Trajectory>& data,
                           const std::vector<Scene>& scenes) const {
  const auto by_seed = index_scenes(scenes);
  double sum = 0.0;
  std::uint64_t n = 0;
  for (const Trajectory& traj : data) {
    const Scene& scene = scene_for(by_seed, traj.seed);
    for (const Frame& frame : traj.frames) {
      sum += frame_nll(featurize(frame, scene, params_), frame.action_label);
      ++n;
    }
  }
  if (n == 0) {
    throw std::invalid_argument("nll needs at least one frame");
  }
  return sum / static_cast<double>(n);
}

std::array<double, kNumBins> TabularBcModel::token_distribution(const FeatureKey& key,
                                                                int dim) const {
  if (dim < 0 || dim > 2) {
    throw std::out_of_range("token dimension must be 0, 1 or 2");
  }
  static const CellCounts kEmpty{};
  const CellCounts* cell = lookup(key);
  if (cell == nullptr) {
    cell = &kEmpty;
  }
  const double a = params_.alpha;
  const double denom = static_cast<double>(cell->cont) + a * kNumBins;
  std::array<double, kNumBins> dist;
  for (int t = 0; t < kNumBins; ++t) {
    dist[static_cast<std::size_t>(t)] =
        (static_cast<double>(cell->tokens[static_cast<std::size_t>(dim)]
                                         [static_cast<std::size_t>(t)]) +
         a) /
        denom;
  }
  return dist;
}

double TabularBcModel::land_probability(const FeatureKey& key) const {
  static const CellCounts kEmpty{};
  const CellCounts* cell = lookup(key);
  if (cell == nullptr) {
    cell = &kEmpty;
  }
  const double a = params_.alpha;
  return (static_cast<double>(cell->land) + a) / (static_cast<double>(cell->total()) + 2.0 * a);
}

std::uint64_t TabularBcModel::frame_count() const {
  std::uint64_t n = 0;
  for (const auto& [idx, cell] : cells_) {
    n += cell.total();
  }
  return n;
}

PolicyDecision BcPolicy::decide(const Scene& scene, const Observation& obs) {
  const BcParams& p = model_->params();
  const double hdist = horizontal_distance(obs.pose, scene.target);
  const double altitude_error = obs.pose.z - (scene.target.z + p.hover_offset);
  const double side_depth = obs.theta.theta >= 0.0 ? obs.depth.right : obs.depth.left;
  const FeatureKey key =
      featurize(obs.hint, hdist, altitude_error, obs.depth.forward, side_depth, p);
  const ActionTokens tokens = model_->predict(key, mode_);
  if (tokens.is_land()) {
    return {true, Action{}, false};
  }
  return {false, dequantize(tokens), false};
}

}  // namespace uavnav
