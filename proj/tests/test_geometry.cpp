#include <cmath>
#include <limits>

#include "doctest.h"
#include "uavnav/geometry.hpp"
#include "uavnav/rng.hpp"

using namespace uavnav;

TEST_CASE("wrap_angle maps into the half-open interval (-pi, pi]") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0).epsilon(1e-12));
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));  // -pi is excluded, maps to +pi
  CHECK(wrap_angle(2.0 * kPi) == doctest::Approx(0.0));
  CHECK(wrap_angle(7.0 * kPi) == doctest::Approx(kPi));

  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.uniform(-50.0, 50.0);
    const double w = wrap_angle(a);
    CHECK(w > -kPi);
    CHECK(w <= kPi);
    // congruent mod 2*pi
    CHECK(std::abs(std::remainder(w - a, kTwoPi)) < 1e-9);
  }
}

TEST_CASE("wrap_angle rejects non-finite input") {
  CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("relative bearing is positive toward the agent's right") {
  const Pose pose{0.0, 0.0, 10.0, 0.0};
  // Heading +x; a target at (10, -10) sits 45 degrees to the right.
  CHECK(relative_bearing(pose, 10.0, -10.0).theta == doctest::Approx(kPi / 4.0));
  CHECK(relative_bearing(pose, 10.0, 10.0).theta == doctest::Approx(-kPi / 4.0));
  CHECK(relative_bearing(pose, 25.0, 0.0).theta == doctest::Approx(0.0));
  // Dead astern resolves to +pi (right rear by convention).
  CHECK(relative_bearing(pose, -10.0, 0.0).theta == doctest::Approx(kPi));
}

TEST_CASE("relative bearing respects the pose heading") {
  const Pose pose{5.0, 5.0, 10.0, kPi / 2.0};  // facing +y
  CHECK(relative_bearing(pose, 15.0, 5.0).theta == doctest::Approx(kPi / 2.0));   // east = right
  CHECK(relative_bearing(pose, -5.0, 5.0).theta == doctest::Approx(-kPi / 2.0));  // west = left
}

TEST_CASE("relative bearing mirror symmetry") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const double yaw = rng.uniform(-kPi, kPi);
    const Pose pose{0.0, 0.0, 10.0, yaw};
    const double range = rng.uniform(1.0, 200.0);
    const double offset = rng.uniform(-kPi + 1e-6, kPi - 1e-6);
    // Place targets symmetric about the heading.
    const double ax = range * std::cos(yaw + offset);
    const double ay = range * std::sin(yaw + offset);
    const double bx = range * std::cos(yaw - offset);
    const double by = range * std::sin(yaw - offset);
    CHECK(relative_bearing(pose, ax, ay).theta ==
          doctest::Approx(-relative_bearing(pose, bx, by).theta).epsilon(1e-9));
  }
}

TEST_CASE("relative bearing rejects a target at the pose's own xy position") {
  const Pose pose{3.0, 4.0, 10.0, 0.0};
  CHECK_THROWS_AS(relative_bearing(pose, 3.0, 4.0), std::domain_error);
}

TEST_CASE("horizontal distance ignores altitude") {
  const Pose pose{0.0, 0.0, 50.0, 1.0};
  CHECK(horizontal_distance(pose, Vec3{3.0, 4.0, -99.0}) == doctest::Approx(5.0));
}
