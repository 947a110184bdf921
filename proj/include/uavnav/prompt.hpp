#pragma once

#include <array>
#include <string>
#include <string_view>

#include "uavnav/geometry.hpp"

namespace uavnav {

/// The seven fuzzy directional hint buckets. Exactly one bucket applies to
/// any bearing; boundaries are closed on the upper edge (|theta| = 15 deg is
/// still StraightAhead, 60.0001 deg is already ToYourRight).
enum class FuzzyHint {
  kStraightAhead,
  kForwardRight,
  kForwardLeft,
  kToYourRight,
  kToYourLeft,
  kToYourRightRear,
  kToYourLeftRear,
};

inline constexpr int kNumHints = 7;

// Canonical hint phrases, indexed by FuzzyHint.
std::string_view hint_phrase(FuzzyHint hint);

// Parse a canonical phrase back to its bucket; throws on unknown text.
FuzzyHint hint_from_phrase(std::string_view phrase);

// Map a relative bearing to its hint bucket. theta > 0 selects the
// right-side phrases. |theta| = pi lands in ToYourRightRear: the wrap
// convention makes the bearing of a target dead-behind +pi, never -pi.
FuzzyHint fuzzy_hint(RelativeBearing bearing);

/// Prompt pieces, serialized in fixed order: placeholder, hint, description.
struct Prompt {
  FuzzyHint hint;
  std::string target_description;
};

inline constexpr std::string_view kImagePlaceholder = "<image>";

// Assemble the single-line instruction prompt. The template is a fixed
// constant so serialization is byte-stable across runs and consumers.
// Throws on an empty description.
std::string build_prompt(FuzzyHint hint, const std::string& description);

}  // namespace uavnav
