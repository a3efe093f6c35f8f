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

// Closed-form time-to-collision for two rigid vehicles: the one-dimensional
// conventional TTC, the aligned-frame two-dimensional baseline and the
// orientation-aware two-dimensional TTC.
//
// Conventions: everything is expressed in the follower's body frame with the
// origin at its front-edge midpoint (X forward, Y left). The lead is expected
// ahead of the follower. A longitudinal contact is the follower's front edge
// reaching the lead's rear; a lateral contact is the side gap closing while
// the two footprints overlap longitudinally.

#ifndef TTC2D_MEASURES_HPP_
#define TTC2D_MEASURES_HPP_

#include <cmath>

#include "ttc2d/frames.hpp"
#include "ttc2d/outcome.hpp"

namespace ttc2d {

/// Closing speeds below this are treated as non-approaching.
inline constexpr double kMinClosingSpeed = 1e-9;

/// Pose, body velocity and body acceleration of one rigid unit.
struct VehicleState {
  Pose2D pose;
  BodyVelocity velocity;
  BodyAcceleration acceleration;

  void validate() const {
    require_finite(pose.x(), "x");
    require_finite(pose.y(), "y");
    require_finite(pose.psi(), "yaw");
    require_finite(velocity.u, "u");
    require_finite(velocity.v, "v");
    require_finite(acceleration.ax, "ax");
    require_finite(acceleration.ay, "ay");
    require_finite(acceleration.yaw_rate, "yaw rate");
  }
};

struct RigidVehicle {
  VehicleState state;
  VehicleGeometry geometry;
};

struct RigidPairInput {
  RigidVehicle lead;
  RigidVehicle follower;

  void validate() const {
    lead.state.validate();
    follower.state.validate();
    lead.geometry.validate();
    follower.geometry.validate();
  }
};

/// Lead kinematics in the follower frame with rotated extents and speeds.
/// The follower's own yaw rate is not used.
inline RelativeKinematics relative_kinematics(const VehicleState& lead, const VehicleGeometry& lead_geom,
                                              const VehicleState& follower) {
  const RotationMatrix2 rot = relative_rotation(lead.pose.psi(), follower.pose.psi());
  const Vec2 s = relative_offset(lead.pose, follower.pose);
  const Vec2 c = project_extent(lead_geom, rot);
  const Vec2 v0 = transform_velocity(lead.velocity, rot);
  const Vec2 a0 = transform_acceleration(lead.acceleration, lead.velocity, rot);
  RelativeKinematics rel;
  rel.sX = s.x;
  rel.sY = s.y;
  rel.dvX = follower.velocity.u - v0.x;
  rel.dvY = follower.velocity.v - v0.y;
  rel.daX = follower.acceleration.ax - a0.x;
  rel.daY = follower.acceleration.ay - a0.y;
  rel.cX = c.x;
  rel.cY = c.y;
  return rel;
}

/// Which end of the follower a longitudinal contact involves.
enum class Approach {
  kLeadAhead,   // follower front reaches the lead's rear
  kLeadBehind,  // lead front reaches the follower's rear
};

namespace detail {

/// Longitudinal and lateral contact times under constant relative speed,
/// each gated on overlap in the other axis at the predicted time.
///
/// Extents are compared by magnitude. The lateral branch works on whichever
/// side the lead is on. The longitudinal overlap check is two-sided: the lead
/// rear must be behind the follower front and the lead front ahead of the
/// follower rear.
inline TtcOutcome gated_constant_speed(const RelativeKinematics& rel, const VehicleGeometry& follower,
                                       Unit unit, Approach approach = Approach::kLeadAhead) {
  const double extent_x = std::abs(rel.cX);
  const double half_y = std::abs(rel.cY) + 0.5 * follower.width;

  TtcOutcome lon = TtcOutcome::none(unit);
  const bool ahead = approach == Approach::kLeadAhead;
  const double gap_x = ahead ? rel.sX - extent_x : -rel.sX - follower.length;
  const double closing_x = ahead ? rel.dvX : -rel.dvX;
  if (gap_x > 0.0 && closing_x > kMinClosingSpeed) {
    const double t = gap_x / closing_x;
    if (std::abs(rel.sY - rel.dvY * t) < half_y) {
      lon = TtcOutcome::contact(t, Direction::kLongitudinal, unit);
    }
  }

  TtcOutcome lat = TtcOutcome::none(unit);
  const double side = rel.sY >= 0.0 ? 1.0 : -1.0;
  const double gap_y = side * rel.sY - half_y;
  const double closing_y = side * rel.dvY;
  if (gap_y > 0.0 && closing_y > kMinClosingSpeed) {
    const double t = gap_y / closing_y;
    const double x_at = rel.sX - rel.dvX * t;
    if (x_at < extent_x && x_at > -follower.length) {
      lat = TtcOutcome::contact(t, Direction::kLateral, unit);
    }
  }
  return earliest(lon, lat);
}

}  // namespace detail

/// Conventional one-dimensional TTC.
///
/// `gap_lon` is measured front end to front end, so the bumper gap is
/// `gap_lon - lead_length`. Returns no collision when the follower is not
/// faster or the bumper gap is already negative.
inline TtcOutcome ttc_conventional(double gap_lon, double v_follow, double v_lead, double lead_length) {
  require_finite(gap_lon, "gap");
  require_finite(v_follow, "follower speed");
  require_finite(v_lead, "lead speed");
  require_finite(lead_length, "lead length");
  if (!(lead_length > 0.0)) throw DomainError("lead length must be positive");
  const double closing = v_follow - v_lead;
  const double gap = gap_lon - lead_length;
  if (closing <= kMinClosingSpeed || gap < 0.0) return TtcOutcome::none();
  return TtcOutcome::contact(gap / closing, Direction::kLongitudinal);
}

/// Relative kinematics as seen by the aligned-frame baseline: lead speeds and
/// extents are used as if both body frames coincided.
inline RelativeKinematics aligned_relative_kinematics(const RigidPairInput& in) {
  const Vec2 s = relative_offset(in.lead.state.pose, in.follower.state.pose);
  RelativeKinematics rel;
  rel.sX = s.x;
  rel.sY = s.y;
  rel.dvX = in.follower.state.velocity.u - in.lead.state.velocity.u;
  rel.dvY = in.follower.state.velocity.v - in.lead.state.velocity.v;
  rel.daX = in.follower.state.acceleration.ax - in.lead.state.acceleration.ax;
  rel.daY = in.follower.state.acceleration.ay - in.lead.state.acceleration.ay;
  rel.cX = in.lead.geometry.length;
  rel.cY = 0.5 * in.lead.geometry.width;
  return rel;
}

/// Two-dimensional TTC assuming aligned body frames. The lateral clearance is
/// the half-width sum of both vehicles.
inline TtcOutcome ttc2d_baseline(const RigidPairInput& in) {
  in.validate();
  return detail::gated_constant_speed(aligned_relative_kinematics(in), in.follower.geometry, Unit::kSingle);
}

/// Orientation-aware two-dimensional TTC for two rigid vehicles. Reduces to
/// ttc2d_baseline exactly when both headings are equal.
inline TtcOutcome ttc2d_v1(const RigidPairInput& in) {
  in.validate();
  const RelativeKinematics rel = relative_kinematics(in.lead.state, in.lead.geometry, in.follower.state);
  return detail::gated_constant_speed(rel, in.follower.geometry, Unit::kSingle);
}

}  // namespace ttc2d

#endif  // TTC2D_MEASURES_HPP_
