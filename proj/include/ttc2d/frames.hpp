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

#ifndef TTC2D_FRAMES_HPP_
#define TTC2D_FRAMES_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ttc2d {

/// Raised when an input lies outside the domain of a kinematic relation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double angle) {
  double a = std::remainder(angle, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

inline void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Unit vector along heading `psi`.
inline Vec2 heading_vector(double psi) { return {std::cos(psi), std::sin(psi)}; }

/// Global pose of a unit's front-edge midpoint. The yaw is kept in (-pi, pi].
class Pose2D {
 public:
  Pose2D() = default;
  Pose2D(double x, double y, double psi) : x_(x), y_(y), psi_(normalize_angle(psi)) {}

  double x() const { return x_; }
  double y() const { return y_; }
  double psi() const { return psi_; }
  Vec2 position() const { return {x_, y_}; }

  friend bool operator==(const Pose2D&, const Pose2D&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double psi_ = 0.0;
};

/// Velocity in the unit's own body frame (u forward, v to the left).
struct BodyVelocity {
  double u = 0.0;
  double v = 0.0;
};

/// Body-frame acceleration (derivatives of u and v) plus yaw rate.
struct BodyAcceleration {
  double ax = 0.0;
  double ay = 0.0;
  double yaw_rate = 0.0;
};

struct VehicleGeometry {
  double length = 0.0;
  double width = 0.0;

  void validate() const {
    if (!(length > 0.0) || !(width > 0.0) || !std::isfinite(length) || !std::isfinite(width)) {
      throw DomainError("vehicle length and width must be positive and finite");
    }
  }
};

struct RotationMatrix2 {
  double r11 = 1.0;
  double r12 = 0.0;
  double r21 = 0.0;
  double r22 = 1.0;

  static RotationMatrix2 from_angle(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, -s, s, c};
  }

  Vec2 operator*(Vec2 v) const { return {r11 * v.x + r12 * v.y, r21 * v.x + r22 * v.y}; }

  double determinant() const { return r11 * r22 - r12 * r21; }
};

/// Relative state of a lead unit expressed in the follower's body frame.
///
/// `s` locates the lead's front-edge midpoint relative to the follower's
/// front-edge midpoint. `dv` and `da` are follower minus lead, so a positive
/// component means the follower closes in along that axis. `c` holds the
/// signed projection of the lead extent (length, half width).
struct RelativeKinematics {
  double sX = 0.0;
  double sY = 0.0;
  double dvX = 0.0;
  double dvY = 0.0;
  double daX = 0.0;
  double daY = 0.0;
  double cX = 0.0;
  double cY = 0.0;
};

/// Rotation taking the lead's body axes into the follower's body axes.
inline RotationMatrix2 relative_rotation(double psi_lead, double psi_follow) {
  require_finite(psi_lead, "lead yaw");
  require_finite(psi_follow, "follower yaw");
  return RotationMatrix2::from_angle(normalize_angle(psi_lead - psi_follow));
}

/// Signed projection of (length, width / 2) onto the follower axes.
inline Vec2 project_extent(const VehicleGeometry& geom, const RotationMatrix2& rot) {
  geom.validate();
  return rot * Vec2{geom.length, 0.5 * geom.width};
}

inline Vec2 transform_velocity(const BodyVelocity& lead_body, const RotationMatrix2& rot) {
  return rot * Vec2{lead_body.u, lead_body.v};
}

/// Lead acceleration in the follower frame, including the rotating-frame
/// terms of the lead's own yaw rate.
inline Vec2 transform_acceleration(const BodyAcceleration& lead_acc, const BodyVelocity& lead_vel,
                                   const RotationMatrix2& rot) {
  return rot * Vec2{lead_acc.ax - lead_vel.v * lead_acc.yaw_rate,
                    lead_acc.ay + lead_vel.u * lead_acc.yaw_rate};
}

/// Lead front-edge midpoint expressed in the follower frame.
inline Vec2 relative_offset(const Pose2D& lead, const Pose2D& follow) {
  const double dx = lead.x() - follow.x();
  const double dy = lead.y() - follow.y();
  const double c = std::cos(follow.psi());
  const double s = std::sin(follow.psi());
  return {c * dx + s * dy, -s * dx + c * dy};
}

}  // namespace ttc2d

#endif  // TTC2D_FRAMES_HPP_
