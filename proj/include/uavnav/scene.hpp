#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavnav/action_codec.hpp"
#include "uavnav/geometry.hpp"

namespace uavnav {

/// Axis-aligned box obstacle.
struct Obstacle {
  Vec3 center;
  Vec3 half_extents;

  bool operator==(const Obstacle& o) const = default;
};

enum class Difficulty { kEasy, kHard };

std::string_view difficulty_name(Difficulty d);
Difficulty difficulty_from_name(std::string_view name);

/// Axis-aligned world box.
struct Bounds {
  Vec3 min;
  Vec3 max;

  bool contains(const Vec3& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y &&
           p.z >= min.z && p.z <= max.z;
  }
  bool operator==(const Bounds& o) const = default;
};

/// Seeded procedural episode world. Immutable after generation; identical
/// seed and parameters reproduce an identical scene bit-exactly.
struct Scene {
  std::uint64_t seed = 0;
  Bounds bounds;
  Pose start;
  Vec3 target;
  std::string target_description;
  std::vector<Obstacle> obstacles;
  Difficulty difficulty = Difficulty::kEasy;

  bool operator==(const Scene& o) const = default;
};

/// Nearest-hit distances along the four body-frame probe rays, capped at
/// kDepthCap. Forward/left/right are horizontal at the pose altitude; down
/// points at the ground or an obstacle top.
struct DepthProbe {
  double forward = 0.0;
  double left = 0.0;
  double right = 0.0;
  double down = 0.0;
};

inline constexpr double kDepthCap = 100.0;
inline constexpr double kUavRadius = 1.0;

inline constexpr double kEasyDistanceMin = 40.0, kEasyDistanceMax = 150.0;
inline constexpr double kHardDistanceMin = 150.0, kHardDistanceMax = 300.0;

/// Generation config for the procedural scenes.
struct GenerationParams {
  Bounds bounds{{-220.0, -220.0, 0.0}, {220.0, 220.0, 60.0}};
  // Sparse default field: the guidance platform carries only three
  // horizontal rays, so worlds dense with cruise-height slabs (or with
  // floating canopies those rays can never see) are outside its envelope.
  int obstacle_count_min = 2;
  int obstacle_count_max = 5;
  double obstacle_half_xy_min = 2.0;
  double obstacle_half_xy_max = 8.0;
  double obstacle_half_z_min = 4.0;
  double obstacle_half_z_max = 16.0;
  double float_probability = 0.0;  // canopy-style boxes lifted off the ground (opt-in)
  double float_gap_max = 10.0;
  double start_altitude_min = 8.0;
  double start_altitude_max = 20.0;
  double target_altitude_min = 0.0;
  double target_altitude_max = 3.0;
  double endpoint_clearance = 4.0;  // keep-out radius around start and target
  double edge_margin = 10.0;        // keep start/target this far inside bounds
  bool force_lateral_start = false; // draw start yaw so initial |theta| > 60 deg
  int max_attempts = 1000;

  bool operator==(const GenerationParams& o) const = default;
};

struct StepResult {
  Pose pose;
  bool collided = false;
  double path_len = 0.0;
};

// Build a scene from a seed. Hard scenes draw the start-target distance from
// [150, 300] m, easy from [40, 150] m. Throws if rejection sampling cannot
// satisfy a constraint within params.max_attempts, naming the constraint.
Scene generate_scene(std::uint64_t seed, Difficulty difficulty, const GenerationParams& params);

// Cast the four probe rays with exact slab-method box intersection.
DepthProbe probe_depth(const Scene& scene, const Pose& pose);

// True iff the segment comes within radius of any obstacle box or dips
// below the ground plane.
bool segment_collides(const Scene& scene, const Vec3& from, const Vec3& to, double radius);

// Apply one action: yaw first, then translate dx along the new heading and
// dz vertically. Positions are clamped to the scene bounds; clamping counts
// as a collision. Throws on out-of-range actions.
StepResult step(const Scene& scene, const Pose& pose, const Action& action);

// --- geometry helpers shared with rendering and tests ---

// Entry distance of a ray into an AABB (0 when the origin is inside),
// or a negative value when the ray misses. Direction need not be unit length;
// the result is in units of |dir|.
double ray_box_entry(const Vec3& origin, const Vec3& dir, const Obstacle& box);

// Euclidean distance from a point to an AABB (0 inside).
double point_box_distance(const Vec3& p, const Obstacle& box);

// Minimum distance between a segment and an AABB.
double segment_box_distance(const Vec3& a, const Vec3& b, const Obstacle& box);

}  // namespace uavnav
