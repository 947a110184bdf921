#include <cmath>
#include <string>

#include "doctest.h"
#include "uavnav/geometry.hpp"
#include "uavnav/prompt.hpp"
#include "uavnav/rng.hpp"

using namespace uavnav;

namespace {

// Independent bucket classifier, written against the hint table rather than
// the production branch structure. Works in degrees to keep boundaries exact.
FuzzyHint classify_deg(double deg) {
  const double m = std::abs(deg);
  const bool right = deg > 0.0;
  if (m <= 15.0) return FuzzyHint::kStraightAhead;
  if (m <= 60.0) return right ? FuzzyHint::kForwardRight : FuzzyHint::kForwardLeft;
  if (m <= 120.0) return right ? FuzzyHint::kToYourRight : FuzzyHint::kToYourLeft;
  return right ? FuzzyHint::kToYourRightRear : FuzzyHint::kToYourLeftRear;
}

FuzzyHint mirror(FuzzyHint h) {
  switch (h) {
    case FuzzyHint::kForwardRight: return FuzzyHint::kForwardLeft;
    case FuzzyHint::kForwardLeft: return FuzzyHint::kForwardRight;
    case FuzzyHint::kToYourRight: return FuzzyHint::kToYourLeft;
    case FuzzyHint::kToYourLeft: return FuzzyHint::kToYourRight;
    case FuzzyHint::kToYourRightRear: return FuzzyHint::kToYourLeftRear;
    case FuzzyHint::kToYourLeftRear: return FuzzyHint::kToYourRightRear;
    default: return h;
  }
}

}  // namespace

TEST_CASE("hint table rows") {
  CHECK(fuzzy_hint({deg2rad(0.0)}) == FuzzyHint::kStraightAhead);
  CHECK(fuzzy_hint({deg2rad(10.0)}) == FuzzyHint::kStraightAhead);
  CHECK(fuzzy_hint({deg2rad(-10.0)}) == FuzzyHint::kStraightAhead);
  CHECK(fuzzy_hint({deg2rad(45.0)}) == FuzzyHint::kForwardRight);
  CHECK(fuzzy_hint({deg2rad(-45.0)}) == FuzzyHint::kForwardLeft);
  CHECK(fuzzy_hint({deg2rad(90.0)}) == FuzzyHint::kToYourRight);
  CHECK(fuzzy_hint({deg2rad(-90.0)}) == FuzzyHint::kToYourLeft);
  CHECK(fuzzy_hint({deg2rad(150.0)}) == FuzzyHint::kToYourRightRear);
  CHECK(fuzzy_hint({deg2rad(-150.0)}) == FuzzyHint::kToYourLeftRear);
}

TEST_CASE("boundaries are closed on the upper edge") {
  CHECK(fuzzy_hint({deg2rad(15.0)}) == FuzzyHint::kStraightAhead);
  CHECK(fuzzy_hint({deg2rad(15.0001)}) == FuzzyHint::kForwardRight);
  CHECK(fuzzy_hint({deg2rad(-15.0001)}) == FuzzyHint::kForwardLeft);
  CHECK(fuzzy_hint({deg2rad(60.0)}) == FuzzyHint::kForwardRight);
  CHECK(fuzzy_hint({deg2rad(60.0001)}) == FuzzyHint::kToYourRight);
  CHECK(fuzzy_hint({deg2rad(-60.0)}) == FuzzyHint::kForwardLeft);
  CHECK(fuzzy_hint({deg2rad(120.0)}) == FuzzyHint::kToYourRight);
  CHECK(fuzzy_hint({deg2rad(120.0001)}) == FuzzyHint::kToYourRightRear);
  CHECK(fuzzy_hint({deg2rad(-120.0)}) == FuzzyHint::kToYourLeft);
  // Dead astern wraps to +pi, so 180 degrees is a right-rear hint.
  CHECK(fuzzy_hint({deg2rad(180.0)}) == FuzzyHint::kToYourRightRear);
}

TEST_CASE("bucket partition matches the reference classifier") {
  Rng rng(101);
  for (int i = 0; i < 100000; ++i) {
    const double deg = rng.uniform(-180.0, 180.0);
    CHECK(fuzzy_hint({deg2rad(deg)}) == classify_deg(deg));
  }
}

TEST_CASE("mirror symmetry away from the ahead bucket") {
  Rng rng(102);
  for (int i = 0; i < 5000; ++i) {
    double deg = rng.uniform(15.0001, 180.0);
    if (rng.bernoulli(0.5)) deg = -deg;
    CHECK(fuzzy_hint({deg2rad(-deg)}) == mirror(fuzzy_hint({deg2rad(deg)})));
  }
}

TEST_CASE("hint ignores target distance") {
  const Pose pose{3.0, -7.0, 12.0, 0.9};
  const Vec3 dir{std::cos(2.1), std::sin(2.1), 0.0};
  FuzzyHint first{};
  for (int i = 0; i < 40; ++i) {
    const double range = 0.5 + 12.0 * i;
    const Vec3 target{pose.x + dir.x * range, pose.y + dir.y * range, 0.0};
    const FuzzyHint h = fuzzy_hint(relative_bearing(pose, target));
    if (i == 0) {
      first = h;
    } else {
      CHECK(h == first);
    }
  }
}

TEST_CASE("phrases round-trip through the parser") {
  for (int i = 0; i < kNumHints; ++i) {
    const FuzzyHint h = static_cast<FuzzyHint>(i);
    CHECK(hint_from_phrase(hint_phrase(h)) == h);
  }
  CHECK_THROWS_AS(hint_from_phrase("behind you"), std::invalid_argument);
  CHECK_THROWS_AS(hint_from_phrase(""), std::invalid_argument);
}

TEST_CASE("prompt assembly ordering and determinism") {
  const std::string p = build_prompt(FuzzyHint::kStraightAhead, "the red car");
  CHECK(p.rfind(std::string(kImagePlaceholder), 0) == 0);  // placeholder first
  const auto hint_at = p.find("straight ahead");
  const auto desc_at = p.find("the red car");
  REQUIRE(hint_at != std::string::npos);
  REQUIRE(desc_at != std::string::npos);
  CHECK(hint_at < desc_at);
  CHECK(p == build_prompt(FuzzyHint::kStraightAhead, "the red car"));
}

TEST_CASE("prompt embeds the hint phrase exactly once") {
  const std::string p = build_prompt(FuzzyHint::kToYourLeft, "a blue truck");
  const auto first = p.find("to your left");
  REQUIRE(first != std::string::npos);
  CHECK(p.find("to your left", first + 1) == std::string::npos);
}

TEST_CASE("prompt rejects an empty description") {
  CHECK_THROWS_AS(build_prompt(FuzzyHint::kStraightAhead, ""), std::invalid_argument);
}
