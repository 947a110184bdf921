// uavnav: seeded UAV navigation pipeline driver.
//
// Stages talk to each other through files in the config's output directory,
// so each one can be run, inspected and re-run in isolation:
//   gen-scenes -> record -> curate -> train-bc -> eval -> plot
// codec-check runs the action codec property suite and sets the exit code;
// mosaic dumps the stitched depth/class observation for one scene.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "uavnav/action_codec.hpp"
#include "uavnav/pipeline.hpp"
#include "uavnav/rng.hpp"

namespace {

using namespace uavnav;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;      // overrides config.out_dir
  std::string seed_range;   // overrides the range of the set a command touches
  std::string filter;       // "on" / "off"
  std::string ablation = "unset";
  int delay_k = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool seed_range_is_eval = false) {
  cmd->add_option("--config", args.config_path, "run config JSON")->required();
  cmd->add_option("--out", args.out_dir, "output directory (overrides the config)");
  cmd->add_option("--seed-range", args.seed_range,
                  seed_range_is_eval ? "override the eval seed range, half-open a..b"
                                     : "override the train seed range, half-open a..b");
}

RunConfig load_with_overrides(const CommonArgs& args, bool seed_range_is_eval) {
  RunConfig config = load_config(args.config_path);
  if (!args.out_dir.empty()) {
    config.out_dir = args.out_dir;
  }
  if (!args.seed_range.empty()) {
    (seed_range_is_eval ? config.eval : config.train).seeds = parse_seed_range(args.seed_range);
  }
  if (!args.filter.empty()) {
    if (args.filter != "on" && args.filter != "off") {
      throw std::invalid_argument("--filter must be on or off");
    }
    config.filter = args.filter == "on";
  }
  if (args.ablation != "unset") {
    config.ablation = args.ablation;
  }
  if (args.delay_k >= 0) {
    config.delay_k = args.delay_k;
  }
  validate_config(config);
  return config;
}

int run_codec_check() {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    std::printf("%s %s\n", ok ? "[ok]  " : "[FAIL]", what);
    if (!ok) {
      ++failures;
    }
  };

  Rng rng(20240901);
  bool round_trip = true;
  for (int i = 0; i < 10000; ++i) {
    const Action a{rng.uniform(kDxLo, kDxHi), rng.uniform(kDzLo, kDzHi),
                   rng.uniform(kDpsiLo, kDpsiHi)};
    const Action back = dequantize(quantize(a));
    round_trip = round_trip && std::abs(back.dx - a.dx) <= (kDxHi - kDxLo) / 196.0 &&
                 std::abs(back.dz - a.dz) <= (kDzHi - kDzLo) / 196.0 &&
                 std::abs(back.dpsi - a.dpsi) <= (kDpsiHi - kDpsiLo) / 196.0;
  }
  check(round_trip, "round-trip error within half a bin on 10^4 random actions");

  bool identity = true;
  for (int i = 0; i < 10000; ++i) {
    const ActionTokens t = ActionTokens::triple(rng.uniform_int(0, kMaxToken),
                                                rng.uniform_int(0, kMaxToken),
                                                rng.uniform_int(0, kMaxToken));
    identity = identity && quantize(dequantize(t)) == t;
  }
  check(identity, "quantize(dequantize(t)) is the identity on 10^4 token triples");

  bool monotone = true;
  for (int i = 0; i < 10000; ++i) {
    double v1 = rng.uniform(kDzLo, kDzHi);
    double v2 = rng.uniform(kDzLo, kDzHi);
    if (v1 > v2) {
      std::swap(v1, v2);
    }
    monotone = monotone && quantize({0.0, v1, 0.0}).cz() <= quantize({0.0, v2, 0.0}).cz();
  }
  check(monotone, "quantization is monotone");

  const ActionTokens zero = quantize({0.0, 0.0, 0.0});
  check(zero == ActionTokens::triple(0, 49, 49), "zero action quantizes to (0, 49, 49)");
  check(is_landing(zero), "the zero-action label triggers the intrinsic stop");

  bool speed = true;
  for (int i = 0; i < 1000; ++i) {
    const Action a{rng.uniform(kDxLo, kDxHi), rng.uniform(kDzLo, kDzHi),
                   rng.uniform(kDpsiLo, kDpsiHi)};
    const VelocityCommand v = to_velocity(a, Pose{0, 0, 10, 0.3});
    if (v.duration > 0.0) {
      speed = speed && std::abs(std::sqrt(v.vx * v.vx + v.vy * v.vy + v.vz * v.vz) - 1.0) <= 1e-9;
    }
  }
  check(speed, "nonzero velocity commands cruise at exactly 1.0 m/s");

  if (failures == 0) {
    std::printf("codec-check: all properties hold\n");
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seeded UAV navigation pipeline"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string plot_scenes, plot_trajectories, eval_policy = "bc";
  std::uint64_t mosaic_seed = 0;

  CLI::App* gen = app.add_subcommand("gen-scenes", "generate train and eval scene files");
  add_common(gen, args);

  CLI::App* record = app.add_subcommand("record", "record expert demonstrations on train scenes");
  add_common(record, args);
  record->add_option("--delay-k", args.delay_k, "zero the yaw label for the first K lateral frames");

  CLI::App* curate = app.add_subcommand("curate", "filter ambiguous lateral frames");
  add_common(curate, args);
  curate->add_option("--filter", args.filter, "on (default from config) or off (pass-through)");

  CLI::App* train = app.add_subcommand("train-bc", "fit the tabular policy on curated frames");
  add_common(train, args);

  CLI::App* eval = app.add_subcommand("eval", "roll out a policy on eval scenes and score it");
  add_common(eval, args, /*seed_range_is_eval=*/true);
  eval->add_option("--ablation", args.ablation,
                   "cold-start (uniform back-off) or 5-view-noop (identical composite; no-op)");
  eval->add_option("--policy", eval_policy, "bc (default), expert, random or no-stop");

  CLI::App* codec = app.add_subcommand("codec-check", "run the action codec property suite");

  CLI::App* plot = app.add_subcommand("plot", "render top-down SVGs for recorded trajectories");
  add_common(plot, args);
  plot->add_option("--scenes", plot_scenes, "scene file (default: train scenes)");
  plot->add_option("--trajectories", plot_trajectories, "JSONL file (default: raw trajectories)");

  CLI::App* mosaic = app.add_subcommand("mosaic", "dump the stitched observation for one scene");
  add_common(mosaic, args, /*seed_range_is_eval=*/true);
  mosaic->add_option("--seed", mosaic_seed, "scene seed")->required();

  CLI::App* all = app.add_subcommand("run-all", "gen-scenes through eval in one call");
  add_common(all, args);
  all->add_option("--delay-k", args.delay_k, "zero the yaw label for the first K lateral frames");
  all->add_option("--filter", args.filter, "on or off");
  all->add_option("--ablation", args.ablation, "cold-start or 5-view-noop");

  CLI11_PARSE(app, argc, argv);

  try {
    if (codec->parsed()) {
      return run_codec_check();
    }
    const bool eval_range = eval->parsed() || mosaic->parsed();
    const RunConfig config = load_with_overrides(args, eval_range);
    const PipelinePaths paths{config.out_dir};
    if (gen->parsed()) {
      run_gen_scenes(config);
    } else if (record->parsed()) {
      run_record(config);
    } else if (curate->parsed()) {
      run_curate(config);
    } else if (train->parsed()) {
      run_train(config);
    } else if (eval->parsed()) {
      const MetricsSummary s = run_eval(config, eval_policy);
      std::printf("n=%d sr=%.2f osr=%.2f spl=%.2f mean_ne=%.2f\n", s.overall.n, s.overall.sr,
                  s.overall.osr, s.overall.spl, s.overall.mean_ne);
    } else if (plot->parsed()) {
      run_plot(config, plot_scenes.empty() ? paths.train_scenes() : plot_scenes,
               plot_trajectories.empty() ? paths.raw_trajectories() : plot_trajectories,
               paths.plots_dir());
    } else if (mosaic->parsed()) {
      run_mosaic(config, mosaic_seed, config.out_dir);
    } else if (all->parsed()) {
      const MetricsSummary s = run_all(config);
      std::printf("n=%d sr=%.2f osr=%.2f spl=%.2f mean_ne=%.2f\n", s.overall.n, s.overall.sr,
                  s.overall.osr, s.overall.spl, s.overall.mean_ne);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
