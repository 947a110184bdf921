#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "uavnav/bc_policy.hpp"
#include "uavnav/curation.hpp"
#include "uavnav/policy.hpp"
#include "uavnav/scene.hpp"
#include "uavnav/serialization.hpp"

namespace uavnav {

// Half-open seed interval, written "a..b" (seeds a, a+1, ..., b-1).
struct SeedRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t count() const { return end - begin; }
  bool overlaps(const SeedRange& o) const {
    // max(begin) < min(end): correctly says an empty range overlaps nothing.
    return std::max(begin, o.begin) < std::min(end, o.end);
  }
  std::string to_string() const;
  bool operator==(const SeedRange&) const = default;
};

SeedRange parse_seed_range(const std::string& text);

// One scene collection. difficulty is "easy", "hard" or "mixed"; mixed
// assigns easy to seeds with seed % 5 < 3 and hard to the rest (a fixed
// 60/40 split). Obstacle-count overrides of -1 inherit the generation block.
struct SceneSetConfig {
  SeedRange seeds;
  std::string difficulty = "easy";
  bool force_lateral_start = false;
  int obstacle_count_min = -1;
  int obstacle_count_max = -1;

  bool operator==(const SceneSetConfig&) const = default;
};

struct RunConfig {
  std::string out_dir = "out";
  int max_steps = 200;
  int delay_k = 0;
  bool filter = true;
  std::string ablation;  // "", "cold-start" or "5-view-noop"
  SceneSetConfig train;
  SceneSetConfig eval;
  ExpertParams expert;
  CurationParams curation;
  BcParams bc;
  GenerationParams generation;

  bool operator==(const RunConfig&) const = default;
};

ordered_json config_to_json(const RunConfig& config);
RunConfig config_from_json(const ordered_json& j);

// Throws std::invalid_argument when ranges are empty/overlapping or an
// enum-like string field holds an unknown value.
void validate_config(const RunConfig& config);

RunConfig load_config(const std::string& path);  // parse + validate
void save_config(const std::string& path, const RunConfig& config);

// Difficulty of one seed under a set's difficulty rule.
Difficulty set_difficulty(const SceneSetConfig& set, std::uint64_t seed);

}  // namespace uavnav
