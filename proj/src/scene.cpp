#include "uavnav/scene.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "uavnav/rng.hpp"

namespace uavnav {
namespace {

constexpr std::array<std::string_view, 12> kTargetDescriptions = {
    "the red sedan parked by the curb",
    "the blue water tower",
    "the yellow excavator near the site office",
    "the white delivery van at the loading dock",
    "the green storage tank",
    "the orange shipping container",
    "the gray utility shed by the fence",
    "the black pickup truck on the gravel lot",
    "the silver grain silo",
    "the brown barn with the open doors",
    "the purple market stall at the plaza",
    "the teal maintenance cart by the hangar",
};

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

std::string_view difficulty_name(Difficulty d) {
  return d == Difficulty::kEasy ? "easy" : "hard";
}

Difficulty difficulty_from_name(std::string_view name) {
  if (name == "easy") return Difficulty::kEasy;
  if (name == "hard") return Difficulty::kHard;
  throw std::invalid_argument("unknown difficulty '" + std::string(name) + "'");
}

double ray_box_entry(const Vec3& origin, const Vec3& dir, const Obstacle& box) {
  const Vec3 lo = box.center - box.half_extents;
  const Vec3 hi = box.center + box.half_extents;
  double tmin = 0.0;
  double tmax = std::numeric_limits<double>::infinity();

  const double o[3] = {origin.x, origin.y, origin.z};
  const double d[3] = {dir.x, dir.y, dir.z};
  const double l[3] = {lo.x, lo.y, lo.z};
  const double h[3] = {hi.x, hi.y, hi.z};
  for (int i = 0; i < 3; ++i) {
    if (d[i] == 0.0) {
      if (o[i] < l[i] || o[i] > h[i]) {
        return -1.0;
      }
      continue;
    }
    double t0 = (l[i] - o[i]) / d[i];
    double t1 = (h[i] - o[i]) / d[i];
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
    if (tmin > tmax) {
      return -1.0;
    }
  }
  return tmin;
}

double point_box_distance(const Vec3& p, const Obstacle& box) {
  const double ex = std::max(std::abs(p.x - box.center.x) - box.half_extents.x, 0.0);
  const double ey = std::max(std::abs(p.y - box.center.y) - box.half_extents.y, 0.0);
  const double ez = std::max(std::abs(p.z - box.center.z) - box.half_extents.z, 0.0);
  return std::sqrt(ex * ex + ey * ey + ez * ez);
}

double segment_box_distance(const Vec3& a, const Vec3& b, const Obstacle& box) {
  // Squared distance to the box is convex along the segment; ternary search
  // converges to the minimum far below any tolerance used by callers.
  auto dist = [&](double t) { return point_box_distance(a + (b - a) * t, box); };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 120; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (dist(m1) <= dist(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return dist(0.5 * (lo + hi));
}

Scene generate_scene(std::uint64_t seed, Difficulty difficulty, const GenerationParams& params) {
  if (params.obstacle_count_min < 0 || params.obstacle_count_max < params.obstacle_count_min) {
    throw std::invalid_argument("generate_scene: invalid obstacle count range");
  }
  const Bounds& b = params.bounds;
  const double m = params.edge_margin;
  if (b.max.x - b.min.x <= 2 * m || b.max.y - b.min.y <= 2 * m || b.max.z <= b.min.z) {
    throw std::invalid_argument("generate_scene: degenerate bounds");
  }

  Rng rng(seed);
  Scene scene;
  scene.seed = seed;
  scene.bounds = b;
  scene.difficulty = difficulty;

  // Start pose.
  scene.start.x = rng.uniform(b.min.x + m, b.max.x - m);
  scene.start.y = rng.uniform(b.min.y + m, b.max.y - m);
  scene.start.z = rng.uniform(params.start_altitude_min, params.start_altitude_max);
  scene.start.yaw = wrap_angle(rng.uniform(-kPi, kPi));

  // Target: constructed at the drawn distance, rejected if it leaves bounds.
  const double dist_lo = difficulty == Difficulty::kEasy ? kEasyDistanceMin : kHardDistanceMin;
  const double dist_hi = difficulty == Difficulty::kEasy ? kEasyDistanceMax : kHardDistanceMax;
  bool placed = false;
  for (int attempt = 0; attempt < params.max_attempts && !placed; ++attempt) {
    const double d3 = rng.uniform(dist_lo, dist_hi);
    const double bearing = rng.uniform(-kPi, kPi);
    const double tz = rng.uniform(params.target_altitude_min, params.target_altitude_max);
    const double dz = tz - scene.start.z;
    if (std::abs(dz) >= d3) {
      continue;
    }
    const double dh = std::sqrt(d3 * d3 - dz * dz);
    const Vec3 t{scene.start.x + dh * std::cos(bearing), scene.start.y + dh * std::sin(bearing), tz};
    if (t.x < b.min.x + m || t.x > b.max.x - m || t.y < b.min.y + m || t.y > b.max.y - m) {
      continue;
    }
    scene.target = t;
    placed = true;
  }
  if (!placed) {
    throw std::runtime_error("generate_scene: could not place target inside bounds at the requested distance");
  }

  if (params.force_lateral_start) {
    // Rotate the start heading so the initial bearing magnitude lands in
    // (60, 180] degrees, i.e. strictly outside the forward buckets.
    const double world_bearing =
        std::atan2(scene.target.y - scene.start.y, scene.target.x - scene.start.x);
    const double magnitude = rng.uniform(deg2rad(61.0), deg2rad(179.0));
    const double side = rng.bernoulli(0.5) ? 1.0 : -1.0;
    // theta = wrap(yaw - world_bearing) * 1, so yaw = bearing + side*magnitude
    // puts the target at theta = side*magnitude.
    scene.start.yaw = wrap_angle(world_bearing + side * magnitude);
  }

  // Obstacles, rejection-sampled clear of both endpoints.
  const int count = rng.uniform_int(params.obstacle_count_min, params.obstacle_count_max);
  const double clearance = params.endpoint_clearance;
  scene.obstacles.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < params.max_attempts && !ok; ++attempt) {
      Obstacle box;
      box.half_extents.x = rng.uniform(params.obstacle_half_xy_min, params.obstacle_half_xy_max);
      box.half_extents.y = rng.uniform(params.obstacle_half_xy_min, params.obstacle_half_xy_max);
      box.half_extents.z = rng.uniform(params.obstacle_half_z_min, params.obstacle_half_z_max);
      box.center.x = rng.uniform(b.min.x + box.half_extents.x, b.max.x - box.half_extents.x);
      box.center.y = rng.uniform(b.min.y + box.half_extents.y, b.max.y - box.half_extents.y);
      box.center.z = box.half_extents.z;  // resting on the ground
      if (rng.bernoulli(params.float_probability)) {
        box.center.z += rng.uniform(0.0, params.float_gap_max);
      }
      if (point_box_distance(scene.start.position(), box) <= clearance ||
          point_box_distance(scene.target, box) <= clearance) {
        continue;
      }
      scene.obstacles.push_back(box);
      ok = true;
    }
    if (!ok) {
      throw std::runtime_error("generate_scene: could not place an obstacle clear of start and target");
    }
  }

  // Deterministic template description.
  scene.target_description =
      std::string(kTargetDescriptions[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(kTargetDescriptions.size()) - 1))]);
  return scene;
}

DepthProbe probe_depth(const Scene& scene, const Pose& pose) {
  const Vec3 origin = pose.position();
  auto cast_horizontal = [&](double heading) {
    const Vec3 dir{std::cos(heading), std::sin(heading), 0.0};
    double best = kDepthCap;
    for (const auto& box : scene.obstacles) {
      const double t = ray_box_entry(origin, dir, box);
      if (t >= 0.0) {
        best = std::min(best, t);
      }
    }
    return best;
  };

  DepthProbe probe;
  probe.forward = cast_horizontal(pose.yaw);
  probe.left = cast_horizontal(pose.yaw + kPi / 2.0);
  probe.right = cast_horizontal(pose.yaw - kPi / 2.0);

  double down = pose.z;  // ground plane
  const Vec3 down_dir{0.0, 0.0, -1.0};
  for (const auto& box : scene.obstacles) {
    const double t = ray_box_entry(origin, down_dir, box);
    if (t >= 0.0) {
      down = std::min(down, t);
    }
  }
  probe.down = std::min(down, kDepthCap);
  return probe;
}

bool segment_collides(const Scene& scene, const Vec3& from, const Vec3& to, double radius) {
  if (radius <= 0.0) {
    throw std::invalid_argument("segment_collides: radius must be positive");
  }
  if (std::min(from.z, to.z) < 0.0) {
    return true;
  }
  for (const auto& box : scene.obstacles) {
    if (segment_box_distance(from, to, box) <= radius) {
      return true;
    }
  }
  return false;
}

StepResult step(const Scene& scene, const Pose& pose, const Action& action) {
  if (action.dx < kDxLo || action.dx > kDxHi || action.dz < kDzLo || action.dz > kDzHi ||
      action.dpsi < kDpsiLo || action.dpsi > kDpsiHi) {
    throw std::out_of_range("step: action outside the control ranges");
  }

  StepResult res;
  res.pose.yaw = wrap_angle(pose.yaw + action.dpsi);
  res.pose.x = pose.x + action.dx * std::cos(res.pose.yaw);
  res.pose.y = pose.y + action.dx * std::sin(res.pose.yaw);
  res.pose.z = pose.z + action.dz;
  res.path_len = std::sqrt(action.dx * action.dx + action.dz * action.dz);

  res.collided = segment_collides(scene, pose.position(), res.pose.position(), kUavRadius);

  const Bounds& b = scene.bounds;
  const double cx = clamp(res.pose.x, b.min.x, b.max.x);
  const double cy = clamp(res.pose.y, b.min.y, b.max.y);
  const double cz = clamp(res.pose.z, b.min.z, b.max.z);
  if (cx != res.pose.x || cy != res.pose.y || cz != res.pose.z) {
    res.collided = true;
    res.pose.x = cx;
    res.pose.y = cy;
    res.pose.z = cz;
  }
  return res;
}

}  // namespace uavnav
