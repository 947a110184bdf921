#include "uavnav/config.hpp"

#include <charconv>
#include <stdexcept>

namespace uavnav {
namespace {

std::uint64_t parse_u64(std::string_view text, const std::string& context) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad seed range '" + context + "'");
  }
  return value;
}

ordered_json set_to_json(const SceneSetConfig& s) {
  return {{"seed_range", s.seeds.to_string()},
          {"difficulty", s.difficulty},
          {"force_lateral_start", s.force_lateral_start},
          {"obstacle_count_min", s.obstacle_count_min},
          {"obstacle_count_max", s.obstacle_count_max}};
}

SceneSetConfig set_from_json(const ordered_json& j) {
  SceneSetConfig s;
  s.seeds = parse_seed_range(j.at("seed_range").get<std::string>());
  s.difficulty = j.at("difficulty").get<std::string>();
  s.force_lateral_start = j.at("force_lateral_start").get<bool>();
  s.obstacle_count_min = j.at("obstacle_count_min").get<int>();
  s.obstacle_count_max = j.at("obstacle_count_max").get<int>();
  return s;
}

}  // namespace

std::string SeedRange::to_string() const {
  return std::to_string(begin) + ".." + std::to_string(end);
}

SeedRange parse_seed_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    throw std::invalid_argument("seed range must look like a..b, got '" + text + "'");
  }
  SeedRange range;
  range.begin = parse_u64(std::string_view(text).substr(0, sep), text);
  range.end = parse_u64(std::string_view(text).substr(sep + 2), text);
  if (range.end < range.begin) {
    throw std::invalid_argument("seed range end before begin in '" + text + "'");
  }
  return range;
}

ordered_json config_to_json(const RunConfig& c) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["out_dir"] = c.out_dir;
  j["max_steps"] = c.max_steps;
  j["delay_k"] = c.delay_k;
  j["filter"] = c.filter;
  j["ablation"] = c.ablation;
  j["train"] = set_to_json(c.train);
  j["eval"] = set_to_json(c.eval);
  j["expert"] = {{"hover_offset", c.expert.hover_offset},
                 {"land_radius", c.expert.land_radius},
                 {"land_altitude_tolerance", c.expert.land_altitude_tolerance},
                 {"evasion_trigger_depth", c.expert.evasion_trigger_depth},
                 {"max_turn", c.expert.max_turn}};
  j["curation"] = {{"lateral_bearing_deg", c.curation.lateral_bearing_deg},
                   {"clear_depth", c.curation.clear_depth}};
  j["bc"] = {{"hover_offset", c.bc.hover_offset},
             {"level_band", c.bc.level_band},
             {"forward_blocked_depth", c.bc.forward_blocked_depth},
             {"lateral_clear_depth", c.bc.lateral_clear_depth},
             {"alpha", c.bc.alpha},
             {"land_threshold", c.bc.land_threshold}};
  const GenerationParams& g = c.generation;
  j["generation"] = {
      {"bounds_min", {{"x", g.bounds.min.x}, {"y", g.bounds.min.y}, {"z", g.bounds.min.z}}},
      {"bounds_max", {{"x", g.bounds.max.x}, {"y", g.bounds.max.y}, {"z", g.bounds.max.z}}},
      {"obstacle_count_min", g.obstacle_count_min},
      {"obstacle_count_max", g.obstacle_count_max},
      {"obstacle_half_xy_min", g.obstacle_half_xy_min},
      {"obstacle_half_xy_max", g.obstacle_half_xy_max},
      {"obstacle_half_z_min", g.obstacle_half_z_min},
      {"obstacle_half_z_max", g.obstacle_half_z_max},
      {"float_probability", g.float_probability},
      {"float_gap_max", g.float_gap_max},
      {"start_altitude_min", g.start_altitude_min},
      {"start_altitude_max", g.start_altitude_max},
      {"target_altitude_min", g.target_altitude_min},
      {"target_altitude_max", g.target_altitude_max},
      {"endpoint_clearance", g.endpoint_clearance},
      {"edge_margin", g.edge_margin},
      {"max_attempts", g.max_attempts}};
  return j;
}

RunConfig config_from_json(const ordered_json& j) {
  const int v = j.at("format_version").get<int>();
  if (v != kFormatVersion) {
    throw std::invalid_argument("unsupported config format_version " + std::to_string(v));
  }
  RunConfig c;
  c.out_dir = j.at("out_dir").get<std::string>();
  c.max_steps = j.at("max_steps").get<int>();
  c.delay_k = j.at("delay_k").get<int>();
  c.filter = j.at("filter").get<bool>();
  c.ablation = j.at("ablation").get<std::string>();
  c.train = set_from_json(j.at("train"));
  c.eval = set_from_json(j.at("eval"));
  const auto& e = j.at("expert");
  c.expert.hover_offset = e.at("hover_offset").get<double>();
  c.expert.land_radius = e.at("land_radius").get<double>();
  c.expert.land_altitude_tolerance = e.at("land_altitude_tolerance").get<double>();
  c.expert.evasion_trigger_depth = e.at("evasion_trigger_depth").get<double>();
  c.expert.max_turn = e.at("max_turn").get<double>();
  const auto& cu = j.at("curation");
  c.curation.lateral_bearing_deg = cu.at("lateral_bearing_deg").get<double>();
  c.curation.clear_depth = cu.at("clear_depth").get<double>();
  const auto& b = j.at("bc");
  c.bc.hover_offset = b.at("hover_offset").get<double>();
  c.bc.level_band = b.at("level_band").get<double>();
  c.bc.forward_blocked_depth = b.at("forward_blocked_depth").get<double>();
  c.bc.lateral_clear_depth = b.at("lateral_clear_depth").get<double>();
  c.bc.alpha = b.at("alpha").get<double>();
  c.bc.land_threshold = b.at("land_threshold").get<double>();
  const auto& g = j.at("generation");
  GenerationParams& gp = c.generation;
  gp.bounds.min = {g.at("bounds_min").at("x").get<double>(), g.at("bounds_min").at("y").get<double>(),
                   g.at("bounds_min").at("z").get<double>()};
  gp.bounds.max = {g.at("bounds_max").at("x").get<double>(), g.at("bounds_max").at("y").get<double>(),
                   g.at("bounds_max").at("z").get<double>()};
  gp.obstacle_count_min = g.at("obstacle_count_min").get<int>();
  gp.obstacle_count_max = g.at("obstacle_count_max").get<int>();
  gp.obstacle_half_xy_min = g.at("obstacle_half_xy_min").get<double>();
  gp.obstacle_half_xy_max = g.at("obstacle_half_xy_max").get<double>();
  gp.obstacle_half_z_min = g.at("obstacle_half_z_min").get<double>();
  gp.obstacle_half_z_max = g.at("obstacle_half_z_max").get<double>();
  gp.float_probability = g.at("float_probability").get<double>();
  gp.float_gap_max = g.at("float_gap_max").get<double>();
  gp.start_altitude_min = g.at("start_altitude_min").get<double>();
  gp.start_altitude_max = g.at("start_altitude_max").get<double>();
  gp.target_altitude_min = g.at("target_altitude_min").get<double>();
  gp.target_altitude_max = g.at("target_altitude_max").get<double>();
  gp.endpoint_clearance = g.at("endpoint_clearance").get<double>();
  gp.edge_margin = g.at("edge_margin").get<double>();
  gp.max_attempts = g.at("max_attempts").get<int>();
  return c;
}

void validate_config(const RunConfig& c) {
  auto check_set = [](const SceneSetConfig& s, const char* name) {
    if (s.seeds.count() == 0) {
      throw std::invalid_argument(std::string(name) + " seed range is empty");
    }
    if (s.difficulty != "easy" && s.difficulty != "hard" && s.difficulty != "mixed") {
      throw std::invalid_argument(std::string(name) + " difficulty must be easy, hard or mixed");
    }
    if ((s.obstacle_count_min < 0) != (s.obstacle_count_max < 0) ||
        (s.obstacle_count_min >= 0 && s.obstacle_count_max < s.obstacle_count_min)) {
      throw std::invalid_argument(std::string(name) + " obstacle count override is inconsistent");
    }
  };
  check_set(c.train, "train");
  check_set(c.eval, "eval");
  if (c.train.seeds.overlaps(c.eval.seeds)) {
    throw std::invalid_argument("train and eval seed ranges overlap");
  }
  if (c.max_steps < 1) {
    throw std::invalid_argument("max_steps must be >= 1");
  }
  if (c.delay_k < 0) {
    throw std::invalid_argument("delay_k must be >= 0");
  }
  if (!c.ablation.empty() && c.ablation != "cold-start" && c.ablation != "5-view-noop") {
    throw std::invalid_argument("ablation must be empty, cold-start or 5-view-noop");
  }
  if (c.out_dir.empty()) {
    throw std::invalid_argument("out_dir must not be empty");
  }
}

RunConfig load_config(const std::string& path) {
  RunConfig c = config_from_json(ordered_json::parse(read_text(path)));
  validate_config(c);
  return c;
}

void save_config(const std::string& path, const RunConfig& config) {
  atomic_write_text(path, config_to_json(config).dump(2) + "\n");
}

Difficulty set_difficulty(const SceneSetConfig& set, std::uint64_t seed) {
  if (set.difficulty == "easy") {
    return Difficulty::kEasy;
  }
  if (set.difficulty == "hard") {
    return Difficulty::kHard;
  }
  return seed % 5 < 3 ? Difficulty::kEasy : Difficulty::kHard;
}

}  // namespace uavnav
