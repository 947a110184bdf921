#include "uavnav/prompt.hpp"

#include <cmath>
#include <stdexcept>

namespace uavnav {
namespace {

constexpr std::array<std::string_view, kNumHints> kPhrases = {
    "straight ahead",     "forward-right",      "forward-left", "to your right",
    "to your left",       "to your right rear", "to your left rear",
};

constexpr double kAheadEdge = deg2rad(15.0);
constexpr double kForwardEdge = deg2rad(60.0);
constexpr double kSideEdge = deg2rad(120.0);

}  // namespace

std::string_view hint_phrase(FuzzyHint hint) {
  return kPhrases[static_cast<int>(hint)];
}

FuzzyHint hint_from_phrase(std::string_view phrase) {
  for (int i = 0; i < kNumHints; ++i) {
    if (kPhrases[i] == phrase) {
      return static_cast<FuzzyHint>(i);
    }
  }
  throw std::invalid_argument("hint_from_phrase: unknown phrase '" + std::string(phrase) + "'");
}

FuzzyHint fuzzy_hint(RelativeBearing bearing) {
  const double mag = std::abs(bearing.theta);
  const bool right = bearing.theta > 0.0;
  if (mag <= kAheadEdge) {
    return FuzzyHint::kStraightAhead;
  }
  if (mag <= kForwardEdge) {
    return right ? FuzzyHint::kForwardRight : FuzzyHint::kForwardLeft;
  }
  if (mag <= kSideEdge) {
    return right ? FuzzyHint::kToYourRight : FuzzyHint::kToYourLeft;
  }
  return right ? FuzzyHint::kToYourRightRear : FuzzyHint::kToYourLeftRear;
}

std::string build_prompt(FuzzyHint hint, const std::string& description) {
  if (description.empty()) {
    throw std::invalid_argument("build_prompt: empty target description");
  }
  std::string out;
  out.reserve(64 + description.size());
  out += kImagePlaceholder;
  out += " The target is ";
  out += hint_phrase(hint);
  out += ". Navigate to ";
  out += description;
  out += " and land.";
  return out;
}

}  // namespace uavnav
