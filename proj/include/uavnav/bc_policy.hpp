#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "uavnav/action_codec.hpp"
#include "uavnav/policy.hpp"
#include "uavnav/trajectory.hpp"

namespace uavnav {

// Discretized stand-in for the visual observation + prompt conditioning: the
// hint bucket plus coarse range, altitude and clearance buckets. Small enough
// that a count table per key is a faithful maximum-likelihood policy.
struct FeatureKey {
  int hint = 0;      // 0..6, mirrors FuzzyHint
  int distance = 0;  // [0,5) [5,20) [20,50) [50,150) [150,inf)
  int altitude = 0;  // 0 below (-2 m under cruise), 1 level, 2 above (+2 m over)
  int forward = 0;   // 0 blocked (< 12 m), 1 clear
  int lateral = 0;   // 0 blocked (target-side depth <= 20 m), 1 clear

  int index() const { return (((hint * 5 + distance) * 3 + altitude) * 2 + forward) * 2 + lateral; }
  static FeatureKey from_index(int idx);
  bool operator==(const FeatureKey&) const = default;
};

inline constexpr int kNumFeatureKeys = 7 * 5 * 3 * 2 * 2;  // 420

struct BcParams {
  double hover_offset = 5.0;           // cruise altitude above target, shared with the expert
  double level_band = 2.0;             // +/- band for the "level" altitude bucket
  double forward_blocked_depth = 12.0;
  double lateral_clear_depth = 20.0;
  double alpha = 1.0;                  // Laplace smoothing constant
  double land_threshold = 0.5;         // smoothed land probability gate

  bool operator==(const BcParams&) const = default;
};

FeatureKey featurize(FuzzyHint hint, double horizontal_dist, double altitude_error,
                     double forward_depth, double target_side_depth, const BcParams& params = {});
FeatureKey featurize(const Frame& frame, const Scene& scene, const BcParams& params = {});

// What predict falls back to on a key with zero evidence. kHintMarginal pools
// counts across everything sharing the hint; kUniform throws that structure
// away (the cold-start ablation: argmax of a uniform table is token 0).
enum class BackoffMode { kHintMarginal, kUniform };

class TabularBcModel {
 public:
  struct CellCounts {
    std::array<std::array<std::uint64_t, kNumBins>, 3> tokens{};  // continue frames only
    std::uint64_t land = 0;
    std::uint64_t cont = 0;
    std::uint64_t total() const { return land + cont; }
  };

  explicit TabularBcModel(const BcParams& params = {}) : params_(params) {}
  TabularBcModel(const BcParams& params, std::map<int, CellCounts> cells,
                 std::array<CellCounts, kNumHints> hint_marginals)
      : params_(params), cells_(std::move(cells)), hint_marginals_(std::move(hint_marginals)) {}

  // Counts are additive, so training is order-invariant by construction.
  void add_frame(const FeatureKey& key, const ActionTokens& label);
  static TabularBcModel train(const std::vector<Trajectory>& data,
                              const std::vector<Scene>& scenes, const BcParams& params = {});

  ActionTokens predict(const FeatureKey& key,
                       BackoffMode mode = BackoffMode::kHintMarginal) const;

  // Mean negative log-likelihood in nats under the per-key smoothed tables
  // (no back-off: an unseen key scores at the uniform-smoothing floor).
  // LAND frames contribute only the stop/continue term.
  double frame_nll(const FeatureKey& key, const ActionTokens& label) const;
  double nll(const std::vector<Trajectory>& data, const std::vector<Scene>& scenes) const;

  // Smoothed per-dimension distribution and landing probability for a key.
  std::array<double, kNumBins> token_distribution(const FeatureKey& key, int dim) const;
  double land_probability(const FeatureKey& key) const;

  std::uint64_t frame_count() const;
  const BcParams& params() const { return params_; }
  const std::map<int, CellCounts>& cells() const { return cells_; }
  const std::array<CellCounts, kNumHints>& hint_marginals() const { return hint_marginals_; }

 private:
  const CellCounts* lookup(const FeatureKey& key) const;

  BcParams params_;
  std::map<int, CellCounts> cells_;
  std::array<CellCounts, kNumHints> hint_marginals_{};
};

// Closed-loop adapter so a trained model can fly episodes.
class BcPolicy : public Policy {
 public:
  explicit BcPolicy(const TabularBcModel& model,
                    BackoffMode mode = BackoffMode::kHintMarginal)
      : model_(&model), mode_(mode) {}
  PolicyDecision decide(const Scene& scene, const Observation& obs) override;

 private:
  const TabularBcModel* model_;
  BackoffMode mode_;
};

}  // namespace uavnav
