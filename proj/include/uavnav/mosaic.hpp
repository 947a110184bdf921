#pragma once

#include <string>
#include <vector>

#include "uavnav/geometry.hpp"
#include "uavnav/scene.hpp"

namespace uavnav {

// Semantic class ids used by the synthetic renderer.
inline constexpr int kClassSky = 0;
inline constexpr int kClassGround = 1;
inline constexpr int kClassTarget = 2;
inline constexpr int kClassObstacleBase = 3;  // obstacle i -> kClassObstacleBase + i

// Visual marker drawn at the target position so it can show up in views.
inline constexpr double kTargetMarkerRadius = 2.0;

enum class CameraKind { kFront, kDown };

std::string_view camera_name(CameraKind camera);

// One rendered camera view: square grid of per-pixel depth (meters, capped at
// kDepthCap) and semantic class id, row-major, row 0 at the top.
struct ViewGrid {
  int width = 0;
  int height = 0;
  CameraKind camera = CameraKind::kFront;
  double fov_deg = 90.0;
  std::vector<double> depth;
  std::vector<int> klass;

  double depth_at(int row, int col) const { return depth[static_cast<std::size_t>(row) * width + col]; }
  int class_at(int row, int col) const { return klass[static_cast<std::size_t>(row) * width + col]; }
  std::string identifier() const;
};

// Vertically stitched observation: front view on rows [0, kSeamRow), down view
// on rows [kSeamRow, kHeight). The seam sits on a 14-pixel patch boundary so
// no 14x14 patch straddles both source views.
struct CompositeGrid {
  static constexpr int kWidth = 224;
  static constexpr int kHeight = 224;
  static constexpr int kSeamRow = 112;

  std::vector<double> depth;  // kWidth * kHeight, row-major
  std::vector<int> klass;
  std::string provenance_front;
  std::string provenance_down;

  double depth_at(int row, int col) const { return depth[static_cast<std::size_t>(row) * kWidth + col]; }
  int class_at(int row, int col) const { return klass[static_cast<std::size_t>(row) * kWidth + col]; }
};

// Pinhole ray cast at 90 degrees field of view. The front camera looks along
// the pose heading with world +z up in the image; the down camera looks
// straight down with the pose heading up in the image, so the two views share
// their boundary rays and the composite is continuous across the seam.
// Depth is measured along the camera axis (a flat floor seen from altitude h
// by the down camera reads h everywhere). resolution must be even and >= 16.
ViewGrid render_view(const Scene& scene, const Pose& pose, CameraKind camera, int resolution);

// Area-average each view to 112x224 and stack front over down. The halves are
// resampled independently; no output pixel mixes the two sources.
CompositeGrid compose(const ViewGrid& front, const ViewGrid& down);

// Inspection dumps. Depth goes to an 8-bit PGM scaled so kDepthCap is white;
// classes go to a PPM with a fixed palette.
void write_depth_pgm(const CompositeGrid& grid, const std::string& path);
void write_class_ppm(const CompositeGrid& grid, const std::string& path);

}  // namespace uavnav
