#include "uavnav/mosaic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace uavnav {
namespace {

struct CameraFrame {
  Vec3 forward;
  Vec3 right;
  Vec3 up;
};

CameraFrame camera_frame(const Pose& pose, CameraKind camera) {
  const Vec3 heading{std::cos(pose.yaw), std::sin(pose.yaw), 0.0};
  const Vec3 heading_right{std::sin(pose.yaw), -std::cos(pose.yaw), 0.0};
  if (camera == CameraKind::kFront) {
    return {heading, heading_right, Vec3{0.0, 0.0, 1.0}};
  }
  // Down camera: image-up is the vehicle heading, so the top edge of the down
  // view shares its boundary rays with the bottom edge of the front view.
  return {Vec3{0.0, 0.0, -1.0}, heading_right, heading};
}

// Nearest hit along origin + t*dir, with dir scaled so dir . forward == 1;
// the returned t is then the depth along the camera axis.
struct Hit {
  double t = -1.0;
  int klass = kClassSky;
};

void consider(Hit& best, double t, int klass) {
  if (t >= 0.0 && (best.t < 0.0 || t < best.t)) {
    best.t = t;
    best.klass = klass;
  }
}

double ray_sphere_entry(const Vec3& origin, const Vec3& dir, const Vec3& center, double radius) {
  const Vec3 m = origin - center;
  const double a = dot(dir, dir);
  const double b = 2.0 * dot(dir, m);
  const double c = dot(m, m) - radius * radius;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    return -1.0;
  }
  const double root = std::sqrt(disc);
  const double t0 = (-b - root) / (2.0 * a);
  if (t0 >= 0.0) {
    return t0;
  }
  const double t1 = (-b + root) / (2.0 * a);
  return t1 >= 0.0 ? t1 : -1.0;
}

Hit cast_ray(const Scene& scene, const Vec3& origin, const Vec3& dir) {
  Hit best;
  if (dir.z < 0.0) {
    consider(best, -origin.z / dir.z, kClassGround);
  }
  consider(best, ray_sphere_entry(origin, dir, scene.target, kTargetMarkerRadius), kClassTarget);
  for (std::size_t i = 0; i < scene.obstacles.size(); ++i) {
    consider(best, ray_box_entry(origin, dir, scene.obstacles[i]),
             kClassObstacleBase + static_cast<int>(i));
  }
  if (best.t < 0.0 || best.t > kDepthCap) {
    return {kDepthCap, kClassSky};
  }
  return best;
}

// Box-filter resample of one source grid to out_h x out_w. Depth is the
// area-weighted mean; class is the area-weighted mode (ties break toward the
// smaller id, which is deterministic).
void resample_into(const ViewGrid& src, int out_h, int out_w, double* depth_out, int* class_out) {
  const double row_scale = static_cast<double>(src.height) / out_h;
  const double col_scale = static_cast<double>(src.width) / out_w;
  for (int r = 0; r < out_h; ++r) {
    const double r0 = r * row_scale;
    const double r1 = (r + 1) * row_scale;
    for (int c = 0; c < out_w; ++c) {
      const double c0 = c * col_scale;
      const double c1 = (c + 1) * col_scale;
      double depth_sum = 0.0;
      double weight_sum = 0.0;
      std::map<int, double> class_weight;
      const int sr_end = std::min(src.height, static_cast<int>(std::ceil(r1)));
      const int sc_end = std::min(src.width, static_cast<int>(std::ceil(c1)));
      for (int sr = static_cast<int>(std::floor(r0)); sr < sr_end; ++sr) {
        const double wr = std::min<double>(sr + 1, r1) - std::max<double>(sr, r0);
        if (wr <= 0.0) continue;
        for (int sc = static_cast<int>(std::floor(c0)); sc < sc_end; ++sc) {
          const double wc = std::min<double>(sc + 1, c1) - std::max<double>(sc, c0);
          if (wc <= 0.0) continue;
          const double w = wr * wc;
          depth_sum += w * src.depth_at(sr, sc);
          weight_sum += w;
          class_weight[src.class_at(sr, sc)] += w;
        }
      }
      // The quotient can drift a hair past the cap in floating point even
      // though every source value respects it.
      depth_out[static_cast<std::size_t>(r) * out_w + c] =
          std::min(depth_sum / weight_sum, kDepthCap);
      int best_class = kClassSky;
      double best_weight = -1.0;
      for (const auto& [id, w] : class_weight) {
        if (w > best_weight) {
          best_weight = w;
          best_class = id;
        }
      }
      class_out[static_cast<std::size_t>(r) * out_w + c] = best_class;
    }
  }
}

}  // namespace

std::string_view camera_name(CameraKind camera) {
  return camera == CameraKind::kFront ? "front" : "down";
}

std::string ViewGrid::identifier() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s@%dx%d", std::string(camera_name(camera)).c_str(), width,
                height);
  return buf;
}

ViewGrid render_view(const Scene& scene, const Pose& pose, CameraKind camera, int resolution) {
  if (resolution < 16 || resolution % 2 != 0) {
    throw std::invalid_argument("render_view: resolution must be even and at least 16");
  }
  ViewGrid grid;
  grid.width = resolution;
  grid.height = resolution;
  grid.camera = camera;
  grid.depth.resize(static_cast<std::size_t>(resolution) * resolution);
  grid.klass.resize(static_cast<std::size_t>(resolution) * resolution);

  const CameraFrame frame = camera_frame(pose, camera);
  const Vec3 origin = pose.position();
  for (int r = 0; r < resolution; ++r) {
    // Pixel centers span (-1, 1); 90-degree FOV puts the image plane at unit
    // distance, so u and v are direct offsets along right and up.
    const double v = 2.0 * (r + 0.5) / resolution - 1.0;
    for (int c = 0; c < resolution; ++c) {
      const double u = 2.0 * (c + 0.5) / resolution - 1.0;
      const Vec3 dir = frame.forward + frame.right * u - frame.up * v;
      const Hit hit = cast_ray(scene, origin, dir);
      const std::size_t idx = static_cast<std::size_t>(r) * resolution + c;
      grid.depth[idx] = hit.t;
      grid.klass[idx] = hit.klass;
    }
  }
  return grid;
}

CompositeGrid compose(const ViewGrid& front, const ViewGrid& down) {
  if (front.width != down.width || front.height != down.height) {
    throw std::invalid_argument("compose: views must share resolution");
  }
  CompositeGrid out;
  out.depth.resize(static_cast<std::size_t>(CompositeGrid::kWidth) * CompositeGrid::kHeight);
  out.klass.resize(out.depth.size());
  out.provenance_front = front.identifier();
  out.provenance_down = down.identifier();

  const std::size_t half = static_cast<std::size_t>(CompositeGrid::kSeamRow) * CompositeGrid::kWidth;
  resample_into(front, CompositeGrid::kSeamRow, CompositeGrid::kWidth, out.depth.data(),
                out.klass.data());
  resample_into(down, CompositeGrid::kHeight - CompositeGrid::kSeamRow, CompositeGrid::kWidth,
                out.depth.data() + half, out.klass.data() + half);
  return out;
}

void write_depth_pgm(const CompositeGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << "P5\n" << CompositeGrid::kWidth << " " << CompositeGrid::kHeight << "\n255\n";
  for (double d : grid.depth) {
    const double scaled = std::clamp(d / kDepthCap, 0.0, 1.0) * 255.0;
    out.put(static_cast<char>(static_cast<unsigned char>(std::lround(scaled))));
  }
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

void write_class_ppm(const CompositeGrid& grid, const std::string& path) {
  static constexpr unsigned char kSkyColor[3] = {135, 206, 235};
  static constexpr unsigned char kGroundColor[3] = {96, 128, 72};
  static constexpr unsigned char kTargetColor[3] = {220, 40, 40};
  static constexpr unsigned char kObstacleColors[6][3] = {
      {200, 160, 60}, {100, 100, 180}, {160, 80, 160},
      {80, 170, 170}, {180, 120, 90},  {120, 120, 120},
  };
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << "P6\n" << CompositeGrid::kWidth << " " << CompositeGrid::kHeight << "\n255\n";
  for (int id : grid.klass) {
    const unsigned char* rgb = kSkyColor;
    if (id == kClassGround) {
      rgb = kGroundColor;
    } else if (id == kClassTarget) {
      rgb = kTargetColor;
    } else if (id >= kClassObstacleBase) {
      rgb = kObstacleColors[(id - kClassObstacleBase) % 6];
    }
    out.write(reinterpret_cast<const char*>(rgb), 3);
  }
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

}  // namespace uavnav
