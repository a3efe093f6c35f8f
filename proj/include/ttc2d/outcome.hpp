// Copyright 2026 The ttc2d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TTC2D_OUTCOME_HPP_
#define TTC2D_OUTCOME_HPP_

#include <cmath>
#include <limits>
#include <string_view>

namespace ttc2d {

inline constexpr double kNoCollision = std::numeric_limits<double>::infinity();

enum class Direction { kNone, kLongitudinal, kLateral };
enum class Unit { kSingle, kTractor, kSemitrailer };

inline std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kLongitudinal:
      return "longitudinal";
    case Direction::kLateral:
      return "lateral";
    case Direction::kNone:
      break;
  }
  return "none";
}

inline std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::kTractor:
      return "tractor";
    case Unit::kSemitrailer:
      return "semitrailer";
    case Unit::kSingle:
      break;
  }
  return "single";
}

/// Predicted contact time, or no collision (infinite time, direction none).
///
/// `valid` is false when the prediction left the kinematic model's domain
/// (articulation at or beyond a right angle).
struct TtcOutcome {
  double time = kNoCollision;
  Direction direction = Direction::kNone;
  Unit unit = Unit::kSingle;
  bool valid = true;

  static TtcOutcome none(Unit unit = Unit::kSingle) { return {kNoCollision, Direction::kNone, unit, true}; }
  static TtcOutcome contact(double t, Direction d, Unit unit = Unit::kSingle) { return {t, d, unit, true}; }
  static TtcOutcome invalid(Unit unit) { return {kNoCollision, Direction::kNone, unit, false}; }

  bool collides() const { return std::isfinite(time); }
};

/// The earlier of two outcomes; ties keep `a`. An invalid input poisons the result.
inline TtcOutcome earliest(const TtcOutcome& a, const TtcOutcome& b) {
  if (!a.valid) return a;
  if (!b.valid) return b;
  return b.time < a.time ? b : a;
}

}  // namespace ttc2d

#endif  // TTC2D_OUTCOME_HPP_
