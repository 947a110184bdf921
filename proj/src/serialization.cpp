#include "uavnav/serialization.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uavnav {
namespace {

ordered_json vec3_to_json(const Vec3& v) { return {{"x", v.x}, {"y", v.y}, {"z", v.z}}; }

Vec3 vec3_from_json(const ordered_json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>()};
}

ordered_json pose_to_json(const Pose& p) {
  return {{"x", p.x}, {"y", p.y}, {"z", p.z}, {"yaw", p.yaw}};
}

Pose pose_from_json(const ordered_json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>(),
          j.at("yaw").get<double>()};
}

void check_version(const ordered_json& j, const char* what) {
  const int v = j.at("format_version").get<int>();
  if (v != kFormatVersion) {
    throw std::runtime_error(std::string(what) + ": unsupported format_version " +
                             std::to_string(v));
  }
}

ordered_json frame_to_json(const Frame& f) {
  ordered_json j;
  j["step"] = f.step;
  j["pose"] = pose_to_json(f.pose);
  j["theta"] = f.theta;
  j["hint"] = std::string(hint_phrase(f.hint));
  j["prompt"] = f.prompt;
  j["depth"] = {{"forward", f.depth.forward},
                {"left", f.depth.left},
                {"right", f.depth.right},
                {"down", f.depth.down}};
  j["action"] = f.action_label.serialize();
  j["raw_action"] = {{"dx", f.raw_action.dx}, {"dz", f.raw_action.dz}, {"dpsi", f.raw_action.dpsi}};
  j["land"] = f.land_label;
  j["delay_injected"] = f.delay_injected;
  return j;
}

Frame frame_from_json(const ordered_json& j) {
  Frame f;
  f.step = j.at("step").get<int>();
  f.pose = pose_from_json(j.at("pose"));
  f.theta = j.at("theta").get<double>();
  f.hint = hint_from_phrase(j.at("hint").get<std::string>());
  f.prompt = j.at("prompt").get<std::string>();
  const auto& d = j.at("depth");
  f.depth = {d.at("forward").get<double>(), d.at("left").get<double>(),
             d.at("right").get<double>(), d.at("down").get<double>()};
  f.action_label = ActionTokens::parse(j.at("action").get<std::string>());
  const auto& r = j.at("raw_action");
  f.raw_action = {r.at("dx").get<double>(), r.at("dz").get<double>(), r.at("dpsi").get<double>()};
  f.land_label = j.at("land").get<bool>();
  f.delay_injected = j.at("delay_injected").get<bool>();
  if (f.land_label != f.action_label.is_land()) {
    throw std::runtime_error("frame land flag disagrees with its action label");
  }
  return f;
}

ordered_json cell_to_json(const TabularBcModel::CellCounts& cell) {
  ordered_json j;
  j["land"] = cell.land;
  j["cont"] = cell.cont;
  ordered_json tokens = ordered_json::array();
  for (const auto& dim : cell.tokens) {
    tokens.push_back(dim);
  }
  j["tokens"] = std::move(tokens);
  return j;
}

TabularBcModel::CellCounts cell_from_json(const ordered_json& j) {
  TabularBcModel::CellCounts cell;
  cell.land = j.at("land").get<std::uint64_t>();
  cell.cont = j.at("cont").get<std::uint64_t>();
  const auto& tokens = j.at("tokens");
  if (tokens.size() != 3) {
    throw std::runtime_error("model cell must have 3 token tables");
  }
  for (int d = 0; d < 3; ++d) {
    const auto& dim = tokens.at(static_cast<std::size_t>(d));
    if (dim.size() != kNumBins) {
      throw std::runtime_error("model token table must have 99 entries");
    }
    for (int t = 0; t < kNumBins; ++t) {
      cell.tokens[static_cast<std::size_t>(d)][static_cast<std::size_t>(t)] =
          dim.at(static_cast<std::size_t>(t)).get<std::uint64_t>();
    }
  }
  return cell;
}

ordered_json group_to_json(const MetricsGroup& g) {
  return {{"n", g.n}, {"sr", g.sr}, {"osr", g.osr}, {"spl", g.spl}, {"mean_ne", g.mean_ne}};
}

}  // namespace

ordered_json scene_to_json(const Scene& scene) {
  ordered_json j;
  j["seed"] = scene.seed;
  j["difficulty"] = std::string(difficulty_name(scene.difficulty));
  j["bounds"] = {{"min", vec3_to_json(scene.bounds.min)}, {"max", vec3_to_json(scene.bounds.max)}};
  j["start"] = pose_to_json(scene.start);
  j["target"] = vec3_to_json(scene.target);
  j["target_description"] = scene.target_description;
  ordered_json obstacles = ordered_json::array();
  for (const Obstacle& o : scene.obstacles) {
    obstacles.push_back(
        {{"center", vec3_to_json(o.center)}, {"half_extents", vec3_to_json(o.half_extents)}});
  }
  j["obstacles"] = std::move(obstacles);
  return j;
}

Scene scene_from_json(const ordered_json& j) {
  Scene scene;
  scene.seed = j.at("seed").get<std::uint64_t>();
  scene.difficulty = difficulty_from_name(j.at("difficulty").get<std::string>());
  scene.bounds = {vec3_from_json(j.at("bounds").at("min")), vec3_from_json(j.at("bounds").at("max"))};
  scene.start = pose_from_json(j.at("start"));
  scene.target = vec3_from_json(j.at("target"));
  scene.target_description = j.at("target_description").get<std::string>();
  for (const auto& o : j.at("obstacles")) {
    scene.obstacles.push_back({vec3_from_json(o.at("center")), vec3_from_json(o.at("half_extents"))});
  }
  return scene;
}

ordered_json trajectory_to_json(const Trajectory& traj) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["seed"] = traj.seed;
  j["status"] = std::string(status_name(traj.status));
  j["final_pose"] = pose_to_json(traj.final_pose);
  ordered_json frames = ordered_json::array();
  for (const Frame& f : traj.frames) {
    frames.push_back(frame_to_json(f));
  }
  j["frames"] = std::move(frames);
  return j;
}

Trajectory trajectory_from_json(const ordered_json& j) {
  check_version(j, "trajectory");
  Trajectory traj;
  traj.seed = j.at("seed").get<std::uint64_t>();
  traj.status = status_from_name(j.at("status").get<std::string>());
  traj.final_pose = pose_from_json(j.at("final_pose"));
  for (const auto& f : j.at("frames")) {
    traj.frames.push_back(frame_from_json(f));
  }
  return traj;
}

ordered_json model_to_json(const TabularBcModel& model) {
  const BcParams& p = model.params();
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["params"] = {{"hover_offset", p.hover_offset},
                 {"level_band", p.level_band},
                 {"forward_blocked_depth", p.forward_blocked_depth},
                 {"lateral_clear_depth", p.lateral_clear_depth},
                 {"alpha", p.alpha},
                 {"land_threshold", p.land_threshold}};
  ordered_json cells = ordered_json::array();
  for (const auto& [index, cell] : model.cells()) {
    ordered_json entry;
    entry["key"] = index;
    ordered_json counts = cell_to_json(cell);
    entry["land"] = counts["land"];
    entry["cont"] = counts["cont"];
    entry["tokens"] = std::move(counts["tokens"]);
    cells.push_back(std::move(entry));
  }
  j["cells"] = std::move(cells);
  ordered_json marginals = ordered_json::array();
  for (const auto& cell : model.hint_marginals()) {
    marginals.push_back(cell_to_json(cell));
  }
  j["hint_marginals"] = std::move(marginals);
  return j;
}

TabularBcModel model_from_json(const ordered_json& j) {
  check_version(j, "model");
  const auto& p = j.at("params");
  BcParams params;
  params.hover_offset = p.at("hover_offset").get<double>();
  params.level_band = p.at("level_band").get<double>();
  params.forward_blocked_depth = p.at("forward_blocked_depth").get<double>();
  params.lateral_clear_depth = p.at("lateral_clear_depth").get<double>();
  params.alpha = p.at("alpha").get<double>();
  params.land_threshold = p.at("land_threshold").get<double>();

  std::map<int, TabularBcModel::CellCounts> cells;
  for (const auto& c : j.at("cells")) {
    const int key = c.at("key").get<int>();
    if (key < 0 || key >= kNumFeatureKeys) {
      throw std::runtime_error("model cell key out of range");
    }
    cells[key] = cell_from_json(c);
  }
  const auto& marginals = j.at("hint_marginals");
  if (marginals.size() != kNumHints) {
    throw std::runtime_error("model must have 7 hint marginal tables");
  }
  std::array<TabularBcModel::CellCounts, kNumHints> hint_marginals;
  for (int h = 0; h < kNumHints; ++h) {
    hint_marginals[static_cast<std::size_t>(h)] =
        cell_from_json(marginals.at(static_cast<std::size_t>(h)));
  }
  return TabularBcModel(params, std::move(cells), std::move(hint_marginals));
}

ordered_json filter_report_to_json(const FilterReport& report) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["total_frames"] = report.total_frames;
  j["inspected"] = report.inspected;
  j["discarded"] = report.discarded;
  j["retained_evasions"] = report.retained_evasions;
  j["discard_fraction"] = report.discard_fraction;
  return j;
}

ordered_json summary_to_json(const MetricsSummary& summary) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["overall"] = group_to_json(summary.overall);
  ordered_json per = ordered_json::object();
  for (const auto& [name, group] : summary.per_difficulty) {
    per[name] = group_to_json(group);
  }
  j["per_difficulty"] = std::move(per);
  return j;
}

std::string results_to_csv(const std::vector<EpisodeResult>& results) {
  std::ostringstream out;
  out << "seed,difficulty,status,ne,success,oracle_success,path_length,shortest_path,spl_term,"
         "steps\n";
  for (const EpisodeResult& r : results) {
    out << r.seed << ',' << difficulty_name(r.difficulty) << ',' << status_name(r.status) << ','
        << ordered_json(r.ne).dump() << ',' << (r.success ? 1 : 0) << ','
        << (r.oracle_success ? 1 : 0) << ',' << ordered_json(r.path_length).dump() << ','
        << ordered_json(r.shortest_path).dump() << ',' << ordered_json(r.spl_term).dump() << ','
        << r.steps << '\n';
  }
  return out.str();
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string partial = path + ".partial";
  {
    std::ofstream out(partial, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + partial + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("failed while writing '" + partial + "'");
    }
  }
  std::filesystem::rename(partial, path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_scenes(const std::string& path, const std::vector<Scene>& scenes) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  ordered_json arr = ordered_json::array();
  for (const Scene& s : scenes) {
    arr.push_back(scene_to_json(s));
  }
  j["scenes"] = std::move(arr);
  atomic_write_text(path, j.dump(2) + "\n");
}

std::vector<Scene> read_scenes(const std::string& path) {
  const ordered_json j = ordered_json::parse(read_text(path));
  check_version(j, "scenes");
  std::vector<Scene> scenes;
  for (const auto& s : j.at("scenes")) {
    scenes.push_back(scene_from_json(s));
  }
  return scenes;
}

void write_trajectories(const std::string& path, const std::vector<Trajectory>& trajectories) {
  std::string out;
  for (const Trajectory& t : trajectories) {
    out += trajectory_to_json(t).dump();
    out += '\n';
  }
  atomic_write_text(path, out);
}

std::vector<Trajectory> read_trajectories(const std::string& path) {
  std::istringstream in(read_text(path));
  std::vector<Trajectory> trajectories;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    try {
      trajectories.push_back(trajectory_from_json(ordered_json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return trajectories;
}

void write_model(const std::string& path, const TabularBcModel& model) {
  atomic_write_text(path, model_to_json(model).dump(2) + "\n");
}

TabularBcModel read_model(const std::string& path) {
  const ordered_json j = ordered_json::parse(read_text(path));
  return model_from_json(j);
}

}  // namespace uavnav
