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

// Two-dimensional TTC between a tractor-semitrailer (lead) and a car
// (follower).
//
// The tractor is handled in closed form. The semitrailer is predicted by
// stepping the tractor-car relative position forward, hanging the semitrailer
// off the joint with its yaw decaying toward the frozen tractor yaw, and
// checking contact gates at every step. `ttc2d_v2` holds speeds constant over
// the horizon; `ttc2d_v3` holds accelerations constant.

#ifndef TTC2D_ARTICULATED_HPP_
#define TTC2D_ARTICULATED_HPP_

#include <algorithm>
#include <cmath>
#include <optional>

#include "ttc2d/frames.hpp"
#include "ttc2d/measures.hpp"
#include "ttc2d/outcome.hpp"
#include "ttc2d/yawkin.hpp"

namespace ttc2d {

/// Tractor state at its front-edge midpoint A plus the articulation inputs.
struct ArticulatedState {
  VehicleState tractor;
  double psi1 = 0.0;   // semitrailer yaw
  double delta = 0.0;  // front-axle steering angle
  double ub0 = 0.0;    // tractor rear-axle longitudinal speed

  void validate() const {
    tractor.validate();
    require_finite(psi1, "semitrailer yaw");
    require_finite(delta, "steering angle");
    require_finite(ub0, "rear axle speed");
  }

  /// Semitrailer front-edge midpoint B.
  Pose2D trailer_front(const ArticulatedGeometry& g) const {
    const Pose2D& a = tractor.pose;
    return {a.x() - g.front_to_joint * std::cos(a.psi()) + g.trailer_front_to_joint * std::cos(psi1),
            a.y() - g.front_to_joint * std::sin(a.psi()) + g.trailer_front_to_joint * std::sin(psi1), psi1};
  }
};

struct SolverConfig {
  double dt = 0.01;
  double horizon = 20.0;
  // Contact tolerance floors. The effective tolerance at a step also covers
  // the gap change over the following step.
  double eps_x = 1e-3;
  double eps_y = 1e-3;
  Approach approach = Approach::kLeadAhead;

  void validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
    if (!(horizon >= dt) || !std::isfinite(horizon)) throw DomainError("horizon must be at least dt");
    if (!(eps_x > 0.0) || !(eps_y > 0.0)) throw DomainError("contact tolerances must be positive");
  }
};

/// Advances the relative position by one step. Positive closing speed shrinks
/// the offsets.
inline RelativeKinematics propagate_relative(const RelativeKinematics& rel, double dt, bool with_accel) {
  RelativeKinematics next = rel;
  if (with_accel) {
    next.sX = rel.sX - rel.dvX * dt - 0.5 * rel.daX * dt * dt;
    next.sY = rel.sY - rel.dvY * dt - 0.5 * rel.daY * dt * dt;
    next.dvX = rel.dvX + rel.daX * dt;
    next.dvY = rel.dvY + rel.daY * dt;
  } else {
    next.sX = rel.sX - rel.dvX * dt;
    next.sY = rel.sY - rel.dvY * dt;
  }
  return next;
}

/// Semitrailer front-edge offset in the car frame given the tractor's.
inline Vec2 semitrailer_offset(Vec2 s0, double psi0, double psi1, double psi_car, const ArticulatedGeometry& geom) {
  const double a0 = psi0 - psi_car;
  const double a1 = psi1 - psi_car;
  return {s0.x - geom.front_to_joint * std::cos(a0) + geom.trailer_front_to_joint * std::cos(a1),
          s0.y - geom.front_to_joint * std::sin(a0) + geom.trailer_front_to_joint * std::sin(a1)};
}

/// Acceleration magnitudes below this use the constant-speed solution.
inline constexpr double kMinRelativeAcceleration = 1e-9;

/// Smallest non-negative t with gap = dv * t + da * t^2 / 2, if any.
inline std::optional<double> quadratic_contact_time(double gap, double dv, double da) {
  if (std::abs(da) < kMinRelativeAcceleration) {
    if (dv > kMinClosingSpeed) return gap / dv;
    return std::nullopt;
  }
  const double a = 0.5 * da;
  const double disc = dv * dv + 4.0 * a * gap;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  // Stable pair of roots of a t^2 + dv t - gap = 0.
  const double q = -0.5 * (dv + std::copysign(sq, dv));
  double best = kNoCollision;
  auto consider = [&best](double t) {
    if (std::isfinite(t) && t >= 0.0 && t < best) best = t;
  };
  if (q != 0.0) {
    consider(q / a);
    consider(-gap / q);
  } else {
    consider(0.0);
  }
  if (!std::isfinite(best)) return std::nullopt;
  // One Newton step to clean up cancellation near double roots.
  const double f = a * best * best + dv * best - gap;
  const double df = 2.0 * a * best + dv;
  if (df != 0.0) {
    const double polished = best - f / df;
    if (polished >= 0.0 && std::abs(a * polished * polished + dv * polished - gap) < std::abs(f)) best = polished;
  }
  return best;
}

namespace detail {

/// Tractor-car contact with constant relative acceleration: per-axis
/// quadratic contact times gated by overlap of the other axis.
inline TtcOutcome gated_constant_accel(const RelativeKinematics& rel, const VehicleGeometry& follower, Unit unit,
                                       Approach approach) {
  const double extent_x = std::abs(rel.cX);
  const double half_y = std::abs(rel.cY) + 0.5 * follower.width;
  const bool ahead = approach == Approach::kLeadAhead;

  TtcOutcome lon = TtcOutcome::none(unit);
  const double gap_x = ahead ? rel.sX - extent_x : -rel.sX - follower.length;
  if (gap_x > 0.0) {
    const auto t = ahead ? quadratic_contact_time(gap_x, rel.dvX, rel.daX)
                         : quadratic_contact_time(gap_x, -rel.dvX, -rel.daX);
    if (t && std::abs(rel.sY - rel.dvY * *t - 0.5 * rel.daY * *t * *t) < half_y) {
      lon = TtcOutcome::contact(*t, Direction::kLongitudinal, unit);
    }
  }

  TtcOutcome lat = TtcOutcome::none(unit);
  const double side = rel.sY >= 0.0 ? 1.0 : -1.0;
  const double gap_y = side * rel.sY - half_y;
  if (gap_y > 0.0) {
    const auto t = quadratic_contact_time(gap_y, side * rel.dvY, side * rel.daY);
    if (t) {
      const double x_at = rel.sX - rel.dvX * *t - 0.5 * rel.daX * *t * *t;
      if (x_at < extent_x && x_at > -follower.length) {
        lat = TtcOutcome::contact(*t, Direction::kLateral, unit);
      }
    }
  }
  return earliest(lon, lat);
}

struct TrailerGaps {
  double gap_x;     // longitudinal gap, negative once the extents overlap
  double gap_y;     // lateral gap on the initial side
  bool overlap_x;   // longitudinal extents overlap
  bool overlap_y;   // lateral extents overlap
};

inline TrailerGaps trailer_gaps(Vec2 s1, double psi1, double psi_car, const ArticulatedGeometry& geom,
                                const VehicleGeometry& car, double side, Approach approach) {
  const Vec2 c1 = project_extent(geom.semitrailer, RotationMatrix2::from_angle(psi1 - psi_car));
  const double extent_x = std::abs(c1.x);
  const double half_y = std::abs(c1.y) + 0.5 * car.width;
  TrailerGaps g;
  g.gap_x = approach == Approach::kLeadAhead ? s1.x - extent_x : -s1.x - car.length;
  g.gap_y = side * s1.y - half_y;
  g.overlap_x = s1.x < extent_x && s1.x > -car.length;
  g.overlap_y = std::abs(s1.y) < half_y;
  return g;
}

/// Steps the semitrailer forward from t = 0 until a contact gate fires or
/// `t_limit` passes. `yaw_at(elapsed, previous_psi1)` gives the semitrailer yaw.
template <class YawFn>
TtcOutcome predict_semitrailer(RelativeKinematics rel, double psi0, double psi1_t0, double psi_car,
                               const ArticulatedGeometry& geom, const VehicleGeometry& car, const SolverConfig& cfg,
                               double t_limit, bool with_accel, YawFn yaw_at) {
  constexpr Unit kUnit = Unit::kSemitrailer;
  if (jackknifed(psi0, psi1_t0)) return TtcOutcome::invalid(kUnit);

  double psi1 = psi1_t0;
  Vec2 s1 = semitrailer_offset({rel.sX, rel.sY}, psi0, psi1, psi_car, geom);
  const double side = s1.y >= 0.0 ? 1.0 : -1.0;
  TrailerGaps now = trailer_gaps(s1, psi1, psi_car, geom, car, side, cfg.approach);
  const bool lon_clear_at_start = now.gap_x > 0.0;
  const bool lat_clear_at_start = now.gap_y > 0.0;
  if (!lon_clear_at_start && !lat_clear_at_start) return TtcOutcome::none(kUnit);

  const double limit = std::min(t_limit, cfg.horizon);
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    if (t > limit) break;

    const RelativeKinematics next_rel = propagate_relative(rel, cfg.dt, with_accel);
    const double next_psi1 = yaw_at(t + cfg.dt, psi1);
    if (jackknifed(psi0, next_psi1)) return TtcOutcome::invalid(kUnit);
    const Vec2 next_s1 = semitrailer_offset({next_rel.sX, next_rel.sY}, psi0, next_psi1, psi_car, geom);
    const TrailerGaps next = trailer_gaps(next_s1, next_psi1, psi_car, geom, car, side, cfg.approach);

    const double eps_x = std::max(cfg.eps_x, now.gap_x - next.gap_x);
    const double eps_y = std::max(cfg.eps_y, now.gap_y - next.gap_y);
    const bool lon_hit = lon_clear_at_start && now.overlap_y && now.gap_x < eps_x;
    const bool lat_hit = lat_clear_at_start && now.overlap_x && now.gap_y < eps_y;
    if (lon_hit && lat_hit) {
      const Direction d =
          std::abs(now.gap_y) < std::abs(now.gap_x) ? Direction::kLateral : Direction::kLongitudinal;
      return TtcOutcome::contact(t, d, kUnit);
    }
    if (lon_hit) return TtcOutcome::contact(t, Direction::kLongitudinal, kUnit);
    if (lat_hit) return TtcOutcome::contact(t, Direction::kLateral, kUnit);

    rel = next_rel;
    psi1 = next_psi1;
    now = next;
  }
  return TtcOutcome::none(kUnit);
}

inline TtcOutcome cap_to_horizon(TtcOutcome o, double horizon) {
  if (o.collides() && o.time > horizon) return TtcOutcome::none(o.unit);
  return o;
}

}  // namespace detail

/// Constant speed and heading over the horizon.
inline TtcOutcome ttc2d_v2(const ArticulatedState& art, const RigidVehicle& car, const ArticulatedGeometry& geom,
                           const SolverConfig& cfg = {}) {
  art.validate();
  car.state.validate();
  car.geometry.validate();
  geom.validate();
  cfg.validate();
  const RelativeKinematics rel = relative_kinematics(art.tractor, geom.tractor, car.state);
  const TtcOutcome tractor = detail::cap_to_horizon(
      detail::gated_constant_speed(rel, car.geometry, Unit::kTractor, cfg.approach), cfg.horizon);

  const double psi0 = art.tractor.pose.psi();
  const double l1 = geom.joint_to_trailer_axle;
  const double ub0 = art.ub0;
  auto yaw_at = [&](double elapsed, double previous) {
    return semitrailer_yaw_constant_speed(art.psi1, psi0, ub0, l1, elapsed, previous);
  };
  const TtcOutcome trailer = detail::predict_semitrailer(rel, psi0, art.psi1, car.state.pose.psi(), geom,
                                                         car.geometry, cfg, tractor.time, false, yaw_at);
  return earliest(tractor, trailer);
}

/// Constant acceleration and heading over the horizon. The car's yaw rate is
/// ignored; the tractor's enters through the rotating-frame acceleration terms.
inline TtcOutcome ttc2d_v3(const ArticulatedState& art, const RigidVehicle& car, const ArticulatedGeometry& geom,
                           const SolverConfig& cfg = {}) {
  art.validate();
  car.state.validate();
  car.geometry.validate();
  geom.validate();
  cfg.validate();
  const RelativeKinematics rel = relative_kinematics(art.tractor, geom.tractor, car.state);
  const TtcOutcome tractor = detail::cap_to_horizon(
      detail::gated_constant_accel(rel, car.geometry, Unit::kTractor, cfg.approach), cfg.horizon);

  const double psi0 = art.tractor.pose.psi();
  const double l1 = geom.joint_to_trailer_axle;
  const double ub0 = art.ub0;
  const double ab0 = art.tractor.acceleration.ax;
  const double cos0 = std::cos(psi0);
  auto yaw_at = [&](double elapsed, double previous) {
    const double travelled = ub0 * elapsed + 0.5 * ab0 * elapsed * elapsed;
    return semitrailer_yaw_variable_speed(art.psi1, psi0, 0.0, travelled * cos0, psi0, l1, previous);
  };
  const TtcOutcome trailer = detail::predict_semitrailer(rel, psi0, art.psi1, car.state.pose.psi(), geom,
                                                         car.geometry, cfg, tractor.time, true, yaw_at);
  return earliest(tractor, trailer);
}

/// Conventional TTC against the whole combination: the lead length runs from
/// the tractor front edge to the semitrailer rear edge along the car axis.
inline TtcOutcome ttc_conventional_articulated(const ArticulatedState& art, const RigidVehicle& car,
                                               const ArticulatedGeometry& geom) {
  const Pose2D b = art.trailer_front(geom);
  const double l = geom.semitrailer.length;
  const Pose2D rear{b.x() - l * std::cos(b.psi()), b.y() - l * std::sin(b.psi()), b.psi()};
  const double front_x = relative_offset(art.tractor.pose, car.state.pose).x;
  const double rear_x = relative_offset(rear, car.state.pose).x;
  const double lead_length = std::max(front_x - rear_x, 1e-9);
  return ttc_conventional(front_x, car.state.velocity.u, art.tractor.velocity.u, lead_length);
}

/// Aligned-frame baseline applied per unit. The semitrailer is placed at its
/// current front edge and moves with the tractor's body velocity.
inline TtcOutcome ttc2d_baseline_articulated(const ArticulatedState& art, const RigidVehicle& car,
                                             const ArticulatedGeometry& geom) {
  RigidPairInput tractor{{art.tractor, geom.tractor}, car};
  TtcOutcome a = ttc2d_baseline(tractor);
  a.unit = Unit::kTractor;
  VehicleState trailer_state = art.tractor;
  trailer_state.pose = art.trailer_front(geom);
  RigidPairInput trailer{{trailer_state, geom.semitrailer}, car};
  TtcOutcome b = ttc2d_baseline(trailer);
  b.unit = Unit::kSemitrailer;
  return earliest(a, b);
}

}  // namespace ttc2d

#endif  // TTC2D_ARTICULATED_HPP_
