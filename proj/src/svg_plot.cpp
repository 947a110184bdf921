#include "uavnav/svg_plot.hpp"

#include <cstdio>
#include <sstream>

#include "uavnav/evaluation.hpp"

namespace uavnav {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_trajectory_svg(const Scene& scene, const Trajectory& traj) {
  const Bounds& b = scene.bounds;
  const double w = b.max.x - b.min.x;
  const double h = b.max.y - b.min.y;

  // World coordinates with +y up; SVG y grows downward, so flip y.
  auto X = [&](double x) { return num(x - b.min.x); };
  auto Y = [&](double y) { return num(b.max.y - y); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(w) << " " << num(h)
      << "\" width=\"700\" height=\"700\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" fill=\"#fbfbf8\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  for (const Obstacle& o : scene.obstacles) {
    svg << "<rect x=\"" << X(o.center.x - o.half_extents.x) << "\" y=\""
        << Y(o.center.y + o.half_extents.y) << "\" width=\"" << num(2.0 * o.half_extents.x)
        << "\" height=\"" << num(2.0 * o.half_extents.y) << "\" fill=\"#b5b5b0\"/>\n";
  }

  svg << "<circle cx=\"" << X(scene.target.x) << "\" cy=\"" << Y(scene.target.y) << "\" r=\""
      << num(kSuccessRadius)
      << "\" fill=\"none\" stroke=\"#2a7d2a\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<circle cx=\"" << X(scene.target.x) << "\" cy=\"" << Y(scene.target.y)
      << "\" r=\"2\" fill=\"#2a7d2a\"/>\n";

  if (!traj.frames.empty()) {
    svg << "<polyline points=\"";
    for (const Frame& f : traj.frames) {
      svg << X(f.pose.x) << "," << Y(f.pose.y) << " ";
    }
    svg << X(traj.final_pose.x) << "," << Y(traj.final_pose.y);
    svg << "\" fill=\"none\" stroke=\"#1c4f9c\" stroke-width=\"1.2\"/>\n";
  }

  svg << "<circle cx=\"" << X(scene.start.x) << "\" cy=\"" << Y(scene.start.y)
      << "\" r=\"3\" fill=\"none\" stroke=\"#1c4f9c\" stroke-width=\"1.2\"/>\n";
  svg << "<circle cx=\"" << X(traj.final_pose.x) << "\" cy=\"" << Y(traj.final_pose.y)
      << "\" r=\"2.5\" fill=\"" << (traj.status == EpisodeStatus::kLanded ? "#1c4f9c" : "#c03030")
      << "\"/>\n";

  svg << "<text x=\"4\" y=\"12\" font-family=\"monospace\" font-size=\"10\" fill=\"#333\">seed "
      << traj.seed << " | " << status_name(traj.status) << " | " << traj.frames.size()
      << " steps</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace uavnav
