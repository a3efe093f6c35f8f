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

// Brute-force ground truth for the closed-form measures: exact overlap of
// oriented rectangles, stepped forward under the motion assumptions of each
// measure and refined by bisection.

#ifndef TTC2D_ORACLE_HPP_
#define TTC2D_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "ttc2d/articulated.hpp"
#include "ttc2d/frames.hpp"
#include "ttc2d/measures.hpp"
#include "ttc2d/outcome.hpp"
#include "ttc2d/yawkin.hpp"

namespace ttc2d {

/// Footprint anchored at its front-edge midpoint; the body extends `length`
/// backwards and `width / 2` to each side.
struct OrientedRect {
  Pose2D front;
  double length = 0.0;
  double width = 0.0;

  std::array<Vec2, 4> corners() const {
    const Vec2 f = heading_vector(front.psi());
    const Vec2 n{-f.y, f.x};
    const Vec2 a = front.position();
    const double hw = 0.5 * width;
    return {a + hw * n, a - hw * n, a - length * f - hw * n, a - length * f + hw * n};
  }

  /// Grows the footprint by `margin` on every side (shrinks if negative).
  OrientedRect inflated(double margin) const {
    const Vec2 f = heading_vector(front.psi());
    const Vec2 a = front.position() + margin * f;
    return {{a.x, a.y, front.psi()}, length + 2.0 * margin, width + 2.0 * margin};
  }
};

namespace detail {

inline std::pair<double, double> project(const std::array<Vec2, 4>& pts, Vec2 axis) {
  double lo = dot(pts[0], axis);
  double hi = lo;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double p = dot(pts[i], axis);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

}  // namespace detail

/// True iff the closed rectangles intersect (touching counts).
inline bool rects_overlap(const OrientedRect& a, const OrientedRect& b) {
  const auto ca = a.corners();
  const auto cb = b.corners();
  const Vec2 fa = heading_vector(a.front.psi());
  const Vec2 fb = heading_vector(b.front.psi());
  const std::array<Vec2, 4> axes{fa, Vec2{-fa.y, fa.x}, fb, Vec2{-fb.y, fb.x}};
  for (const Vec2& axis : axes) {
    const auto [alo, ahi] = detail::project(ca, axis);
    const auto [blo, bhi] = detail::project(cb, axis);
    if (ahi < blo || bhi < alo) return false;
  }
  return true;
}

/// Motion assumption frozen over the prediction horizon.
enum class MotionModel {
  kConstantSpeedHeading,
  kConstantAccelHeading,
  kArticulatedConstantSpeed,
  kArticulatedConstantAccel,
};

inline bool is_articulated(MotionModel m) {
  return m == MotionModel::kArticulatedConstantSpeed || m == MotionModel::kArticulatedConstantAccel;
}

inline bool has_acceleration(MotionModel m) {
  return m == MotionModel::kConstantAccelHeading || m == MotionModel::kArticulatedConstantAccel;
}

struct OracleConfig {
  double dt = 0.0025;
  double horizon = 20.0;
  double margin = 0.0;  // added to every footprint on all sides
};

struct RigidScene {
  RigidVehicle lead;
  RigidVehicle follower;
};

struct ArticulatedScene {
  ArticulatedState truck;
  ArticulatedGeometry geometry;
  RigidVehicle car;
};

namespace detail {

/// Front-edge pose after `t` seconds of translation at frozen heading.
/// `yaw_terms` adds the rotating-frame acceleration of the unit's own yaw rate.
inline Pose2D advance(const VehicleState& s, double t, bool with_accel, bool yaw_terms) {
  const double psi = s.pose.psi();
  const Vec2 f = heading_vector(psi);
  const Vec2 n{-f.y, f.x};
  const Vec2 vel = s.velocity.u * f + s.velocity.v * n;
  Vec2 p = s.pose.position() + t * vel;
  if (with_accel) {
    const double r = yaw_terms ? s.acceleration.yaw_rate : 0.0;
    const Vec2 acc = (s.acceleration.ax - s.velocity.v * r) * f + (s.acceleration.ay + s.velocity.u * r) * n;
    p = p + (0.5 * t * t) * acc;
  }
  return {p.x, p.y, psi};
}

struct Footprints {
  OrientedRect car;
  std::array<OrientedRect, 2> units;
  std::array<Unit, 2> tags;
  int count = 1;
};

inline Footprints footprints(MotionModel model, const RigidScene& scene, double t, double margin) {
  const bool acc = has_acceleration(model);
  Footprints fp;
  fp.car = OrientedRect{advance(scene.follower.state, t, acc, false), scene.follower.geometry.length,
                        scene.follower.geometry.width}
               .inflated(margin);
  fp.units[0] = OrientedRect{advance(scene.lead.state, t, acc, true), scene.lead.geometry.length,
                             scene.lead.geometry.width}
                    .inflated(margin);
  fp.tags[0] = Unit::kSingle;
  fp.count = 1;
  return fp;
}

inline Footprints footprints(MotionModel model, const ArticulatedScene& scene, double t, double margin) {
  const bool acc = has_acceleration(model);
  const ArticulatedGeometry& g = scene.geometry;
  const ArticulatedState& truck = scene.truck;
  Footprints fp;
  fp.car = OrientedRect{advance(scene.car.state, t, acc, false), scene.car.geometry.length,
                        scene.car.geometry.width}
               .inflated(margin);
  const Pose2D a = advance(truck.tractor, t, acc, true);
  const double psi0 = a.psi();
  double psi1 = truck.psi1;
  if (acc) {
    const double travelled = truck.ub0 * t + 0.5 * truck.tractor.acceleration.ax * t * t;
    psi1 = semitrailer_yaw_variable_speed(truck.psi1, psi0, 0.0, travelled * std::cos(psi0), psi0,
                                          g.joint_to_trailer_axle, truck.psi1);
  } else {
    psi1 = semitrailer_yaw_constant_speed(truck.psi1, psi0, truck.ub0, g.joint_to_trailer_axle, t, truck.psi1);
  }
  const Vec2 joint = a.position() - g.front_to_joint * heading_vector(psi0);
  const Vec2 b = joint + g.trailer_front_to_joint * heading_vector(psi1);
  fp.units[0] = OrientedRect{a, g.tractor.length, g.tractor.width}.inflated(margin);
  fp.units[1] = OrientedRect{{b.x, b.y, psi1}, g.semitrailer.length, g.semitrailer.width}.inflated(margin);
  fp.tags = {Unit::kTractor, Unit::kSemitrailer};
  fp.count = 2;
  return fp;
}

/// Index of the first unit overlapping the car, or -1.
inline int touching_unit(const Footprints& fp) {
  for (int i = 0; i < fp.count; ++i) {
    if (rects_overlap(fp.car, fp.units[static_cast<std::size_t>(i)])) return i;
  }
  return -1;
}

}  // namespace detail

/// Lateral (sideswipe) when the extents along the car's X axis already
/// overlapped just before contact, longitudinal otherwise.
inline Direction contact_direction(const OrientedRect& car, const OrientedRect& unit) {
  const Vec2 f = heading_vector(car.front.psi());
  const auto [clo, chi] = detail::project(car.corners(), f);
  const auto [ulo, uhi] = detail::project(unit.corners(), f);
  return (chi < ulo || uhi < clo) ? Direction::kLongitudinal : Direction::kLateral;
}

namespace detail {

template <class Scene>
TtcOutcome first_contact(MotionModel model, const Scene& scene, const OracleConfig& cfg) {
  auto at = [&](double t) { return footprints(model, scene, t, cfg.margin); };
  Footprints prev = at(0.0);
  if (int hit = touching_unit(prev); hit >= 0) {
    const auto idx = static_cast<std::size_t>(hit);
    return TtcOutcome::contact(0.0, contact_direction(prev.car, prev.units[idx]), prev.tags[idx]);
  }
  double t_prev = 0.0;
  for (long k = 1;; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    if (t > cfg.horizon) break;
    const Footprints cur = at(t);
    if (touching_unit(cur) < 0) {
      prev = cur;
      t_prev = t;
      continue;
    }
    double lo = t_prev;
    double hi = t;
    while (hi - lo > cfg.dt / 16.0) {
      const double mid = 0.5 * (lo + hi);
      const Footprints m = at(mid);
      if (touching_unit(m) >= 0) {
        hi = mid;
      } else {
        lo = mid;
        prev = m;
      }
    }
    const Footprints contact = at(hi);
    const int hit = touching_unit(contact);
    const auto idx = static_cast<std::size_t>(hit);
    return TtcOutcome::contact(hi, contact_direction(prev.car, prev.units[idx]), contact.tags[idx]);
  }
  return TtcOutcome::none(model == MotionModel::kConstantSpeedHeading || model == MotionModel::kConstantAccelHeading
                              ? Unit::kSingle
                              : Unit::kSemitrailer);
}

}  // namespace detail

/// First time the footprints touch under `model`, refined to dt / 16.
inline TtcOutcome first_contact_time(MotionModel model, const RigidScene& scene, const OracleConfig& cfg = {}) {
  if (is_articulated(model)) throw DomainError("articulated motion model needs an articulated scene");
  return detail::first_contact(model, scene, cfg);
}

inline TtcOutcome first_contact_time(MotionModel model, const ArticulatedScene& scene, const OracleConfig& cfg = {}) {
  if (!is_articulated(model)) throw DomainError("rigid motion model needs a rigid scene");
  return detail::first_contact(model, scene, cfg);
}

}  // namespace ttc2d

#endif  // TTC2D_ORACLE_HPP_
