#pragma once

#include <string>

#include "uavnav/scene.hpp"
#include "uavnav/trajectory.hpp"

namespace uavnav {

// Top-down SVG of one episode: world bounds as the frame, obstacles as gray
// rectangles, the flown path as a polyline, a dashed 20 m success circle
// around the target, and start/final markers. World +y points up on the page.
std::string render_trajectory_svg(const Scene& scene, const Trajectory& traj);

}  // namespace uavnav
