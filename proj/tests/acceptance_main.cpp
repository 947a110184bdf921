// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Each criterion is self-contained so a red line points at one property.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "uavnav/bc_policy.hpp"
#include "uavnav/curation.hpp"
#include "uavnav/evaluation.hpp"
#include "uavnav/mosaic.hpp"
#include "uavnav/pipeline.hpp"
#include "uavnav/rng.hpp"
#include "uavnav/serialization.hpp"

using namespace uavnav;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

// Every summary produced anywhere in this harness lands here; criterion 8
// asserts the metric ordering on all of them.
std::vector<MetricsSummary>& all_summaries() {
  static std::vector<MetricsSummary> s;
  return s;
}

MetricsSummary summarize_and_keep(const std::vector<EpisodeResult>& results) {
  const MetricsSummary s = summarize(results);
  all_summaries().push_back(s);
  return s;
}

bool ordering_holds(const MetricsGroup& g) { return g.spl <= g.sr && g.sr <= g.osr; }

std::vector<EpisodeResult> fly_and_score(const std::vector<Scene>& scenes, Policy& policy,
                                         const RecordOptions& options = {}) {
  std::vector<EpisodeResult> results;
  results.reserve(scenes.size());
  for (const Scene& scene : scenes) {
    results.push_back(score_episode(record_episode(scene, policy, options), scene));
  }
  return results;
}

#define REQ(cond, msg)                  \
  do {                                  \
    if (!(cond)) {                      \
      ok = false;                       \
      why += std::string(msg) + "; ";   \
    }                                   \
  } while (0)

// ---------------------------------------------------------------------------
// 1. Codec round-trip fidelity.

bool c1_codec(std::string& why) {
  bool ok = true;
  const auto t0 = Clock::now();
  Rng rng(515151);
  const double half_dx = (kDxHi - kDxLo) / 196.0;
  const double half_dz = (kDzHi - kDzLo) / 196.0;
  const double half_dpsi = (kDpsiHi - kDpsiLo) / 196.0;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Action a{rng.uniform(kDxLo, kDxHi), rng.uniform(kDzLo, kDzHi),
                   rng.uniform(kDpsiLo, kDpsiHi)};
    const Action d = dequantize(quantize(a));
    if (std::fabs(d.dx - a.dx) > half_dx || std::fabs(d.dz - a.dz) > half_dz ||
        std::fabs(d.dpsi - a.dpsi) > half_dpsi) {
      worst = std::max({worst, std::fabs(d.dx - a.dx), std::fabs(d.dz - a.dz),
                        std::fabs(d.dpsi - a.dpsi)});
      ok = false;
    }
  }
  if (!ok) {
    why += fmt("round-trip error %.6f exceeds half a bin; ", worst);
  }
  const ActionTokens zero = quantize({0.0, 0.0, 0.0});
  REQ(zero == ActionTokens::triple(0, 49, 49), "quantized zero action is not (0,49,49)");
  REQ(is_landing(zero), "zero action does not register as a landing");
  const double dt = seconds_since(t0);
  REQ(dt < 1.0, fmt("took %.2f s (budget 1 s)", dt));
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Hint buckets: closed upper boundaries, exact partition.

int reference_bucket(double theta_deg) {
  if (std::fabs(theta_deg) <= 15.0) return 0;                    // straight ahead
  if (theta_deg > 15.0 && theta_deg <= 60.0) return 1;           // forward-right
  if (theta_deg < -15.0 && theta_deg >= -60.0) return 2;         // forward-left
  if (theta_deg > 60.0 && theta_deg <= 120.0) return 3;          // to your right
  if (theta_deg < -60.0 && theta_deg >= -120.0) return 4;        // to your left
  if (theta_deg > 120.0) return 5;                               // right rear
  return 6;                                                      // left rear
}

FuzzyHint bucket_to_hint(int bucket) {
  switch (bucket) {
    case 0: return FuzzyHint::kStraightAhead;
    case 1: return FuzzyHint::kForwardRight;
    case 2: return FuzzyHint::kForwardLeft;
    case 3: return FuzzyHint::kToYourRight;
    case 4: return FuzzyHint::kToYourLeft;
    case 5: return FuzzyHint::kToYourRightRear;
    default: return FuzzyHint::kToYourLeftRear;
  }
}

bool c2_buckets(std::string& why) {
  bool ok = true;
  const struct {
    double deg;
    FuzzyHint expect;
  } boundary[] = {
      {0.0, FuzzyHint::kStraightAhead},     {15.0, FuzzyHint::kStraightAhead},
      {-15.0, FuzzyHint::kStraightAhead},   {60.0, FuzzyHint::kForwardRight},
      {-60.0, FuzzyHint::kForwardLeft},     {120.0, FuzzyHint::kToYourRight},
      {-120.0, FuzzyHint::kToYourLeft},     {180.0, FuzzyHint::kToYourRightRear},
      {15.2, FuzzyHint::kForwardRight},     {-15.2, FuzzyHint::kForwardLeft},
      {60.2, FuzzyHint::kToYourRight},      {-60.2, FuzzyHint::kToYourLeft},
      {120.2, FuzzyHint::kToYourRightRear}, {-120.2, FuzzyHint::kToYourLeftRear},
  };
  for (const auto& row : boundary) {
    if (fuzzy_hint({deg2rad(row.deg)}) != row.expect) {
      ok = false;
      why += fmt("wrong bucket at %+.1f deg; ", row.deg);
    }
  }

  Rng rng(626262);
  int checked = 0;
  for (int i = 0; i < 100000; ++i) {
    const double theta = wrap_angle(rng.uniform(-kPi, kPi));
    const double deg = theta * 180.0 / kPi;
    // Exactly one reference interval matches by construction; confirm the
    // implementation picks that interval.
    int matches = 0;
    if (std::fabs(deg) <= 15.0) ++matches;
    if (deg > 15.0 && deg <= 60.0) ++matches;
    if (deg < -15.0 && deg >= -60.0) ++matches;
    if (deg > 60.0 && deg <= 120.0) ++matches;
    if (deg < -60.0 && deg >= -120.0) ++matches;
    if (deg > 120.0) ++matches;
    if (deg < -120.0) ++matches;
    if (matches != 1) {
      ok = false;
      why += fmt("%.9f deg matched %d intervals; ", deg, matches);
      continue;
    }
    if (fuzzy_hint({theta}) != bucket_to_hint(reference_bucket(deg))) {
      ok = false;
      why += fmt("bucket mismatch at %.9f deg; ", deg);
    }
    ++checked;
  }
  REQ(checked >= 99000, "partition sweep did not cover enough angles");
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Curation filter vs the injected-delay oracle.

Scene wall_scene(std::uint64_t seed, bool target_right, double gap) {
  Scene s;
  s.seed = seed;
  s.bounds = {{-220.0, -220.0, 0.0}, {220.0, 220.0, 60.0}};
  s.start = {0.0, 0.0, 10.0, 0.0};
  s.target = {0.0, target_right ? -120.0 : 120.0, 1.0};
  s.target_description = "the striped water tower";
  const double wall_y = (gap + 3.0) * (target_right ? -1.0 : 1.0);
  // Spans the whole world along x so no flight path can round its end.
  s.obstacles.push_back({{0.0, wall_y, 8.0}, {250.0, 3.0, 8.0}});
  return s;
}

bool c3_filter_oracle(std::string& why) {
  bool ok = true;
  GenerationParams params;
  params.obstacle_count_min = 0;
  params.obstacle_count_max = 0;
  params.force_lateral_start = true;

  ExpertPolicy expert;
  ReactionDelayPolicy delayed(expert, 3);
  std::vector<Trajectory> data;
  std::size_t frames = 0;
  for (std::uint64_t seed = 9000; seed < 9100; ++seed) {
    data.push_back(record_episode(generate_scene(seed, Difficulty::kEasy, params), delayed));
    frames += data.back().frames.size();
  }
  REQ(frames >= 2000, fmt("dataset has only %.0f frames", static_cast<double>(frames)));

  const auto [kept, report] = filter_frames(data);
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::set<int> kept_steps;
    for (const Frame& f : kept[i].frames) {
      kept_steps.insert(f.step);
    }
    for (const Frame& f : data[i].frames) {
      const bool discarded = kept_steps.count(f.step) == 0;
      tp += discarded && f.delay_injected ? 1u : 0u;
      fp += discarded && !f.delay_injected ? 1u : 0u;
      fn += !discarded && f.delay_injected ? 1u : 0u;
    }
  }
  REQ(tp > 0, "no delayed frames were discarded at all");
  REQ(fp == 0, fmt("%.0f false discards (precision < 1)", static_cast<double>(fp)));
  REQ(fn == 0, fmt("%.0f missed delays (recall < 1)", static_cast<double>(fn)));
  REQ(report.discarded == tp + fp, "report total disagrees with the per-frame count");

  // Lateral wall within 20 m: held frames are genuine evasions, all retained.
  std::vector<Trajectory> walls;
  std::uint64_t seed = 9900;
  for (const double gap : {6.0, 12.0, 18.0}) {
    for (const bool right : {true, false}) {
      const Scene s = wall_scene(seed++, right, gap);
      ReactionDelayPolicy fresh(expert, 3);
      walls.push_back(record_episode(s, fresh));
    }
  }
  const auto [kept_walls, wall_report] = filter_frames(walls);
  (void)kept_walls;
  REQ(wall_report.discarded == 0,
      fmt("%.0f evasion frames discarded next to a wall", static_cast<double>(wall_report.discarded)));
  REQ(wall_report.retained_evasions >= 6, "expected at least one retained evasion per wall scene");
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Replay fidelity from decoded labels.

bool c4_replay(std::string& why) {
  bool ok = true;
  GenerationParams params;
  ExpertPolicy expert;
  int replayed = 0;
  for (std::uint64_t seed = 9500; seed < 9550; ++seed) {
    const Difficulty diff = seed % 2 == 0 ? Difficulty::kEasy : Difficulty::kHard;
    const Scene scene = generate_scene(seed, diff, params);
    const Trajectory traj = record_episode(scene, expert);
    Pose pose = scene.start;
    bool mismatch = false;
    for (const Frame& f : traj.frames) {
      if (f.pose.x != pose.x || f.pose.y != pose.y || f.pose.z != pose.z ||
          f.pose.yaw != pose.yaw) {
        mismatch = true;
        break;
      }
      if (f.land_label || is_landing(f.action_label)) {
        break;  // the recorder stops without moving
      }
      pose = step(scene, pose, dequantize(f.action_label)).pose;
    }
    if (!mismatch && (traj.final_pose.x != pose.x || traj.final_pose.y != pose.y ||
                      traj.final_pose.z != pose.z || traj.final_pose.yaw != pose.yaw)) {
      mismatch = true;
    }
    if (mismatch) {
      ok = false;
      why += fmt("seed %.0f diverged; ", static_cast<double>(seed));
    }
    ++replayed;
  }
  REQ(replayed == 50, "expected 50 trajectories");
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Closed-loop expert through the codec.

bool c5_expert(std::string& why) {
  bool ok = true;
  const auto t0 = Clock::now();
  GenerationParams params;
  std::vector<Scene> scenes;
  for (std::uint64_t seed = 10000; seed < 10100; ++seed) {
    scenes.push_back(generate_scene(seed, Difficulty::kEasy, params));
  }
  ExpertPolicy expert;
  const MetricsSummary tokenized = summarize_and_keep(fly_and_score(scenes, expert));
  REQ(tokenized.overall.sr >= 95.0, fmt("tokenized SR %.1f < 95", tokenized.overall.sr));
  REQ(tokenized.overall.spl >= 80.0, fmt("tokenized SPL %.1f < 80", tokenized.overall.spl));

  const MetricsSummary raw =
      summarize_and_keep(fly_and_score(scenes, expert, RecordOptions{200, true}));
  const double gap = std::fabs(tokenized.overall.sr - raw.overall.sr);
  REQ(gap <= 5.0, fmt("SR moves %.1f points when quantization is bypassed", gap));
  const double dt = seconds_since(t0);
  REQ(dt < 120.0, fmt("took %.1f s (budget 120 s)", dt));
  return ok;
}

// ---------------------------------------------------------------------------
// 6 + 7 share one train/eval setup.

struct AblationOutcome {
  bool ready = false;
  std::string error;
  double sr_curated = 0.0;
  double sr_uncurated = 0.0;
  double sr_cold = 0.0;
};

const AblationOutcome& ablation_outcome() {
  static AblationOutcome out = [] {
    AblationOutcome o;
    try {
      GenerationParams params;
      params.obstacle_count_min = 0;
      params.obstacle_count_max = 0;
      params.force_lateral_start = true;
      // Pin every flight to the cruise band. The reaction delay holds yaw
      // only, so the demonstrator finishes its descent during the held
      // frames; with varied start altitudes the curated split would lose
      // all of its above-band frames and the comparison would measure
      // altitude coverage instead of the yaw behavior it is about.
      params.target_altitude_min = 3.0;
      params.target_altitude_max = 3.0;
      params.start_altitude_min = 8.0;
      params.start_altitude_max = 8.0;

      std::vector<Scene> train_scenes;
      for (std::uint64_t seed = 11000; seed < 11060; ++seed) {
        train_scenes.push_back(generate_scene(seed, Difficulty::kEasy, params));
      }
      ExpertPolicy expert;
      ReactionDelayPolicy delayed(expert, 3);
      std::vector<Trajectory> raw;
      for (const Scene& s : train_scenes) {
        raw.push_back(record_episode(s, delayed));
      }
      const auto [curated, report] = filter_frames(raw);
      if (report.discarded == 0) {
        o.error = "delay injection produced nothing to filter";
        return o;
      }
      const TabularBcModel model_curated = TabularBcModel::train(curated, train_scenes);
      const TabularBcModel model_uncurated = TabularBcModel::train(raw, train_scenes);

      std::vector<Scene> eval_scenes;
      for (std::uint64_t seed = 12000; seed < 12200; ++seed) {
        const Difficulty diff = seed % 5 < 3 ? Difficulty::kEasy : Difficulty::kHard;
        eval_scenes.push_back(generate_scene(seed, diff, params));
      }
      BcPolicy fly_curated(model_curated, BackoffMode::kHintMarginal);
      BcPolicy fly_uncurated(model_uncurated, BackoffMode::kHintMarginal);
      BcPolicy fly_cold(model_curated, BackoffMode::kUniform);
      o.sr_curated = summarize_and_keep(fly_and_score(eval_scenes, fly_curated)).overall.sr;
      o.sr_uncurated = summarize_and_keep(fly_and_score(eval_scenes, fly_uncurated)).overall.sr;
      o.sr_cold = summarize_and_keep(fly_and_score(eval_scenes, fly_cold)).overall.sr;
      o.ready = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    return o;
  }();
  return out;
}

bool c6_curation_ablation(std::string& why) {
  bool ok = true;
  const AblationOutcome& o = ablation_outcome();
  REQ(o.ready, "setup failed: " + o.error);
  if (o.ready) {
    REQ(o.sr_curated >= o.sr_uncurated + 5.0,
        fmt("curated SR %.1f vs uncurated %.1f (< 5 point margin)", o.sr_curated,
            o.sr_uncurated));
  }
  return ok;
}

bool c7_cold_start(std::string& why) {
  bool ok = true;
  const AblationOutcome& o = ablation_outcome();
  REQ(o.ready, "setup failed: " + o.error);
  if (o.ready) {
    REQ(o.sr_cold < o.sr_curated,
        fmt("cold-start SR %.1f not strictly below %.1f", o.sr_cold, o.sr_curated));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Metric ordering, exact rescoring, no-stop gap.

bool c8_metrics(std::string& why) {
  bool ok = true;
  GenerationParams params;
  ExpertPolicy expert;

  // Independent recompute must agree exactly, not within a tolerance.
  std::vector<EpisodeResult> results;
  for (std::uint64_t seed = 13000; seed < 13020; ++seed) {
    const Difficulty diff = seed % 2 == 0 ? Difficulty::kEasy : Difficulty::kHard;
    const Scene scene = generate_scene(seed, diff, params);
    const Trajectory traj = record_episode(scene, expert);
    const EpisodeResult r = score_episode(traj, scene);
    results.push_back(r);

    const double ne = (traj.final_pose.position() - scene.target).norm();
    double closest = ne;
    double path = 0.0;
    for (std::size_t i = 0; i < traj.frames.size(); ++i) {
      closest = std::min(closest, (traj.frames[i].pose.position() - scene.target).norm());
      const Vec3 from = traj.frames[i].pose.position();
      const Vec3 to = i + 1 < traj.frames.size() ? traj.frames[i + 1].pose.position()
                                                 : traj.final_pose.position();
      path += (to - from).norm();
    }
    const bool success = traj.status == EpisodeStatus::kLanded && ne <= kSuccessRadius;
    const double spl = success ? r.shortest_path / std::max(path, r.shortest_path) : 0.0;
    if (r.ne != ne || r.path_length != path || r.success != success ||
        r.oracle_success != (closest <= kSuccessRadius) || r.spl_term != spl ||
        r.shortest_path != (scene.target - scene.start.position()).norm() ||
        r.steps != static_cast<int>(traj.frames.size())) {
      ok = false;
      why += fmt("rescoring seed %.0f disagrees; ", static_cast<double>(seed));
    }
  }
  summarize_and_keep(results);

  // No-stop variant: reaches targets but never finishes.
  GenerationParams open_params;
  open_params.obstacle_count_min = 0;
  open_params.obstacle_count_max = 0;
  std::vector<Scene> open_scenes;
  for (std::uint64_t seed = 13100; seed < 13150; ++seed) {
    open_scenes.push_back(generate_scene(seed, Difficulty::kEasy, open_params));
  }
  NoStopPolicy no_stop(expert);
  const MetricsSummary gap = summarize_and_keep(fly_and_score(open_scenes, no_stop));
  REQ(gap.overall.osr == 100.0, fmt("no-stop OSR %.1f, expected 100", gap.overall.osr));
  REQ(gap.overall.sr == 0.0, fmt("no-stop SR %.1f, expected 0", gap.overall.sr));

  // Ordering on every summary this harness has produced so far.
  int bad = 0;
  for (const MetricsSummary& s : all_summaries()) {
    if (!ordering_holds(s.overall)) {
      ++bad;
    }
    for (const auto& [name, group] : s.per_difficulty) {
      if (!ordering_holds(group)) {
        ++bad;
      }
    }
  }
  REQ(bad == 0, fmt("%.0f summaries violate spl <= sr <= osr", static_cast<double>(bad)));
  REQ(all_summaries().size() >= 6, "expected the earlier criteria to register summaries");
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Mosaic seam alignment and half independence.

bool c9_mosaic(std::string& why) {
  bool ok = true;
  REQ(CompositeGrid::kSeamRow == 112, "seam row moved off 112");
  REQ(CompositeGrid::kSeamRow % 14 == 0, "seam row is not on a 14-pixel boundary");

  GenerationParams params;
  Rng rng(616161);
  constexpr int kHalf = CompositeGrid::kSeamRow * CompositeGrid::kWidth;
  for (std::uint64_t seed = 13200; seed < 13205; ++seed) {
    const Scene scene = generate_scene(seed, Difficulty::kEasy, params);
    const ViewGrid front = render_view(scene, scene.start, CameraKind::kFront, 224);
    const ViewGrid down = render_view(scene, scene.start, CameraKind::kDown, 224);
    const CompositeGrid base = compose(front, down);

    for (int trial = 0; trial < 4; ++trial) {
      ViewGrid front2 = front;
      ViewGrid down2 = down;
      for (int i = 0; i < 64; ++i) {
        const std::size_t pf = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(front2.depth.size()) - 1));
        front2.depth[pf] = rng.uniform(0.0, kDepthCap);
        front2.klass[pf] = rng.uniform_int(0, 5);
        const std::size_t pd = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(down2.depth.size()) - 1));
        down2.depth[pd] = rng.uniform(0.0, kDepthCap);
        down2.klass[pd] = rng.uniform_int(0, 5);
      }

      // Scribbling on the front source must leave the bottom half untouched.
      const CompositeGrid poked_front = compose(front2, down);
      const bool bottom_same =
          std::memcmp(poked_front.depth.data() + kHalf, base.depth.data() + kHalf,
                      sizeof(double) * kHalf) == 0 &&
          std::memcmp(poked_front.klass.data() + kHalf, base.klass.data() + kHalf,
                      sizeof(int) * kHalf) == 0;
      // And vice versa.
      const CompositeGrid poked_down = compose(front, down2);
      const bool top_same =
          std::memcmp(poked_down.depth.data(), base.depth.data(), sizeof(double) * kHalf) == 0 &&
          std::memcmp(poked_down.klass.data(), base.klass.data(), sizeof(int) * kHalf) == 0;
      if (!bottom_same || !top_same) {
        ok = false;
        why += fmt("seed %.0f: a perturbation bled across the seam; ",
                   static_cast<double>(seed));
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 10. Pipeline determinism inside the time budget.

bool c10_determinism(std::string& why) {
  bool ok = true;
  const fs::path root = fs::temp_directory_path() / "uavnav_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);

  RunConfig cfg;
  cfg.delay_k = 3;
  cfg.train.seeds = {14000, 14200};  // the 200-scene desk-scale run
  cfg.train.difficulty = "mixed";
  cfg.train.force_lateral_start = true;
  cfg.eval.seeds = {14300, 14340};
  cfg.eval.difficulty = "mixed";
  validate_config(cfg);

  const std::vector<std::string> names = {
      "scenes_train.json", "scenes_eval.json",  "trajectories_raw.jsonl",
      "trajectories_curated.jsonl", "filter_report.json", "model.json",
      "train_log.json", "results.csv", "summary.json"};

  RunConfig cfg_a = cfg;
  cfg_a.out_dir = (root / "a").string();
  const auto t0 = Clock::now();
  all_summaries().push_back(run_all(cfg_a));
  const double first = seconds_since(t0);
  REQ(first < 300.0, fmt("first run took %.1f s (budget 300 s)", first));

  RunConfig cfg_b = cfg;
  cfg_b.out_dir = (root / "b").string();
  const auto t1 = Clock::now();
  all_summaries().push_back(run_all(cfg_b));
  const double second = seconds_since(t1);
  REQ(second < 300.0, fmt("second run took %.1f s (budget 300 s)", second));

  for (const std::string& name : names) {
    const std::string a = read_text((root / "a" / name).string());
    const std::string b = read_text((root / "b" / name).string());
    if (a != b) {
      ok = false;
      why += name + " differs between runs; ";
    }
    if (a.empty()) {
      ok = false;
      why += name + " is empty; ";
    }
  }
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.path().string().ends_with(".partial")) {
      ok = false;
      why += "leftover partial file " + entry.path().filename().string() + "; ";
    }
  }
  fs::remove_all(root);
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {1, "codec round-trip fidelity within half a bin", c1_codec},
      {2, "directional buckets: closed boundaries, one bucket per angle", c2_buckets},
      {3, "curation filter equals the injected-delay oracle; walls retained", c3_filter_oracle},
      {4, "decoded labels replay recorded poses bit-exactly", c4_replay},
      {5, "scripted expert clears the success bars through the codec", c5_expert},
      {6, "curated training beats uncurated by five success points", c6_curation_ablation},
      {7, "cold-start backoff strictly underperforms the hint marginal", c7_cold_start},
      {8, "metric ordering, exact rescoring, and the no-stop gap", c8_metrics},
      {9, "mosaic seam on the patch grid with independent halves", c9_mosaic},
      {10, "end-to-end pipeline determinism under the time budget", c10_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    bool passed = false;
    try {
      passed = c.fn(why);
    } catch (const std::exception& e) {
      why += std::string("exception: ") + e.what();
    }
    if (passed) {
      std::printf("[PASS] %d. %s\n", c.id, c.name);
    } else {
      std::printf("[FAIL] %d. %s -- %s\n", c.id, c.name, why.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/10 passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
