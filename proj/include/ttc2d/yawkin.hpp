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

// Kinematics of a tractor-semitrailer with no side slip at any axle.
//
// Layout along the tractor axis, front to back: front edge A, front axle,
// articulation joint C, rear axle. The joint sits `rear_axle_to_joint` ahead
// of the tractor rear axle. Along the semitrailer: front edge B, joint C,
// semitrailer rear axle.

#ifndef TTC2D_YAWKIN_HPP_
#define TTC2D_YAWKIN_HPP_

#include <cmath>
#include <numbers>

#include "ttc2d/frames.hpp"

namespace ttc2d {

/// Articulation magnitude at which the kinematic model is considered invalid.
inline constexpr double kJackknifeLimit = 0.5 * std::numbers::pi;

struct ArticulatedGeometry {
  VehicleGeometry tractor;
  VehicleGeometry semitrailer;
  double front_to_joint = 0.0;          // l_fa: tractor front edge A to joint C
  double trailer_front_to_joint = 0.0;  // l_ra: semitrailer front edge B to joint C
  double wheelbase = 0.0;               // l0
  double joint_to_trailer_axle = 0.0;   // l1
  double rear_axle_to_joint = 0.0;      // lb
  double front_axle_to_joint = 0.0;     // la, kept for completeness

  void validate() const {
    tractor.validate();
    semitrailer.validate();
    for (double v : {front_to_joint, trailer_front_to_joint, wheelbase, joint_to_trailer_axle,
                     rear_axle_to_joint, front_axle_to_joint}) {
      if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("articulated lengths must be positive");
    }
  }

  /// Distance from the tractor rear axle forward to the front edge A.
  double rear_axle_to_front() const { return front_to_joint + rear_axle_to_joint; }
};

inline bool jackknifed(double psi0, double psi1) {
  return std::abs(normalize_angle(psi1 - psi0)) >= kJackknifeLimit;
}

inline double tractor_yaw_rate(double ub0, double delta, double l0) {
  if (!(l0 > 0.0)) throw DomainError("wheelbase must be positive");
  if (!(std::abs(delta) < 0.5 * std::numbers::pi)) throw DomainError("steering angle must be within (-pi/2, pi/2)");
  return ub0 * std::tan(delta) / l0;
}

inline double semitrailer_yaw_rate(double ub0, double delta, double psi0, double psi1,
                                   const ArticulatedGeometry& geom) {
  const double l1 = geom.joint_to_trailer_axle;
  if (!(l1 > 0.0)) throw DomainError("joint to semitrailer axle distance must be positive");
  const double articulation = normalize_angle(psi1 - psi0);
  return tractor_yaw_rate(ub0, delta, geom.wheelbase) * (geom.rear_axle_to_joint / l1) * std::cos(articulation) -
         (ub0 / l1) * std::sin(articulation);
}

namespace detail {

/// Closed-form decay of the articulation offset behind a straight-driving
/// tractor: |tan(offset / 2)| shrinks by exp(exponent). The sign follows the
/// previous offset; a zero previous offset stays at the fixed point.
inline double decayed_offset(double offset0, double exponent, double previous_offset) {
  if (previous_offset == 0.0) return 0.0;
  const double magnitude = 2.0 * std::atan(std::abs(std::tan(0.5 * offset0)) * std::exp(exponent));
  return previous_offset < 0.0 ? -magnitude : magnitude;
}

}  // namespace detail

/// Semitrailer yaw after `elapsed` seconds behind a tractor that holds yaw
/// `psi0_t0` at constant rear-axle speed `ub0`.
inline double semitrailer_yaw_constant_speed(double psi1_t0, double psi0_t0, double ub0, double l1,
                                             double elapsed, double psi1_prev) {
  if (!(l1 > 0.0)) throw DomainError("joint to semitrailer axle distance must be positive");
  if (ub0 < 0.0) throw DomainError("rear axle speed must be non-negative");
  const double offset0 = normalize_angle(psi1_t0 - psi0_t0);
  const double previous = normalize_angle(psi1_prev - psi0_t0);
  return normalize_angle(psi0_t0 + detail::decayed_offset(offset0, -ub0 * elapsed / l1, previous));
}

/// Semitrailer yaw for a tractor of fixed yaw `psi0` whose rear axle moved
/// from global X `xb0_t0` to `xb0_t`. Singular when the tractor heads along
/// the global Y axis.
inline double semitrailer_yaw_variable_speed(double psi1_t0, double psi0_t0, double xb0_t0, double xb0_t,
                                             double psi0, double l1, double psi1_prev) {
  if (!(l1 > 0.0)) throw DomainError("joint to semitrailer axle distance must be positive");
  const double c = std::cos(psi0);
  if (std::abs(c) <= 1e-6) throw DomainError("tractor heading too close to the global Y axis");
  const double offset0 = normalize_angle(psi1_t0 - psi0_t0);
  const double previous = normalize_angle(psi1_prev - psi0_t0);
  return normalize_angle(psi0_t0 + detail::decayed_offset(offset0, (xb0_t0 - xb0_t) / (l1 * c), previous));
}

struct AxleState {
  double x = 0.0;
  double y = 0.0;
};

/// Configuration of the combination. Axle and edge positions other than the
/// tractor rear axle are derived from it.
struct KinematicState {
  AxleState rear_axle;  // tractor rear axle (X_b0, Y_b0)
  double psi0 = 0.0;
  double psi1 = 0.0;

  AxleState front_axle(const ArticulatedGeometry& g) const {
    return {rear_axle.x + g.wheelbase * std::cos(psi0), rear_axle.y + g.wheelbase * std::sin(psi0)};
  }
  AxleState joint(const ArticulatedGeometry& g) const {
    return {rear_axle.x + g.rear_axle_to_joint * std::cos(psi0),
            rear_axle.y + g.rear_axle_to_joint * std::sin(psi0)};
  }
  AxleState trailer_axle(const ArticulatedGeometry& g) const {
    const AxleState c = joint(g);
    return {c.x - g.joint_to_trailer_axle * std::cos(psi1), c.y - g.joint_to_trailer_axle * std::sin(psi1)};
  }
  /// Tractor front-edge midpoint A with yaw psi0.
  Pose2D tractor_front(const ArticulatedGeometry& g) const {
    const double d = g.rear_axle_to_front();
    return {rear_axle.x + d * std::cos(psi0), rear_axle.y + d * std::sin(psi0), psi0};
  }
  /// Semitrailer front-edge midpoint B with yaw psi1.
  Pose2D trailer_front(const ArticulatedGeometry& g) const {
    const AxleState c = joint(g);
    return {c.x + g.trailer_front_to_joint * std::cos(psi1), c.y + g.trailer_front_to_joint * std::sin(psi1),
            psi1};
  }
};

/// One forward-Euler step with steering and rear-axle speed held over `dt`.
/// The rear axle has no lateral velocity; every other point follows from the
/// rigid links.
inline KinematicState step_kinematic_model(const KinematicState& s, double ub0, double delta,
                                           const ArticulatedGeometry& geom, double dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  if (jackknifed(s.psi0, s.psi1)) throw DomainError("articulation angle reached the jackknife limit");
  const double psi0_rate = tractor_yaw_rate(ub0, delta, geom.wheelbase);
  const double psi1_rate = semitrailer_yaw_rate(ub0, delta, s.psi0, s.psi1, geom);
  KinematicState next;
  next.rear_axle.x = s.rear_axle.x + ub0 * std::cos(s.psi0) * dt;
  next.rear_axle.y = s.rear_axle.y + ub0 * std::sin(s.psi0) * dt;
  next.psi0 = normalize_angle(s.psi0 + psi0_rate * dt);
  next.psi1 = normalize_angle(s.psi1 + psi1_rate * dt);
  if (jackknifed(next.psi0, next.psi1)) throw DomainError("articulation angle reached the jackknife limit");
  return next;
}

}  // namespace ttc2d

#endif  // TTC2D_YAWKIN_HPP_
