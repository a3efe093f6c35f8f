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

#include "ttc2d/frames.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

namespace ttc2d {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(NormalizeAngle, MapsIntoHalfOpenRange) {
  EXPECT_DOUBLE_EQ(normalize_angle(0.0), 0.0);
  EXPECT_DOUBLE_EQ(normalize_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(normalize_angle(-kPi), kPi);
  EXPECT_NEAR(normalize_angle(3.0 * kPi + 0.1), -kPi + 0.1, 1e-12);
  EXPECT_NEAR(normalize_angle(-0.5), -0.5, 0.0);
}

TEST(Pose2D, NormalizesYaw) {
  const Pose2D p{1.0, 2.0, 2.0 * kPi + 0.25};
  EXPECT_NEAR(p.psi(), 0.25, 1e-12);
}

TEST(VehicleGeometry, RejectsNonPositive) {
  EXPECT_THROW((VehicleGeometry{0.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((VehicleGeometry{4.0, -1.0}.validate()), DomainError);
  EXPECT_NO_THROW((VehicleGeometry{4.0, 1.8}.validate()));
}

TEST(RelativeRotation, EqualYawIsIdentity) {
  const auto r = relative_rotation(0.3, 0.3);
  EXPECT_DOUBLE_EQ(r.r11, 1.0);
  EXPECT_DOUBLE_EQ(r.r12, 0.0);
  EXPECT_DOUBLE_EQ(r.r21, 0.0);
  EXPECT_DOUBLE_EQ(r.r22, 1.0);
}

TEST(RelativeRotation, QuarterTurn) {
  const auto r = relative_rotation(kPi / 2.0, 0.0);
  EXPECT_NEAR(r.r11, 0.0, 1e-15);
  EXPECT_NEAR(r.r12, -1.0, 1e-15);
  EXPECT_NEAR(r.r21, 1.0, 1e-15);
  EXPECT_NEAR(r.r22, 0.0, 1e-15);
}

TEST(RelativeRotation, MatchesScalarCosSin) {
  const auto r = relative_rotation(0.1, -0.2);
  const double c = std::cos(0.3);
  const double s = std::sin(0.3);
  EXPECT_NEAR(r.r11, c, 1e-12);
  EXPECT_NEAR(r.r12, -s, 1e-12);
  EXPECT_NEAR(r.r21, s, 1e-12);
  EXPECT_NEAR(r.r22, c, 1e-12);
  // R R^T = I
  EXPECT_NEAR(r.r11 * r.r11 + r.r12 * r.r12, 1.0, 1e-12);
  EXPECT_NEAR(r.r11 * r.r21 + r.r12 * r.r22, 0.0, 1e-12);
}

TEST(RelativeRotation, RejectsNonFinite) {
  EXPECT_THROW(relative_rotation(std::nan(""), 0.0), DomainError);
  EXPECT_THROW(relative_rotation(0.0, INFINITY), DomainError);
}

TEST(RelativeRotation, OrthonormalForRandomAngles) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> angle(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const auto r = relative_rotation(angle(gen), angle(gen));
    EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
    EXPECT_NEAR(r.r11 * r.r11 + r.r21 * r.r21, 1.0, 1e-12);
    EXPECT_NEAR(r.r12 * r.r12 + r.r22 * r.r22, 1.0, 1e-12);
    EXPECT_NEAR(r.r11 * r.r12 + r.r21 * r.r22, 0.0, 1e-12);
  }
}

TEST(ProjectExtent, Identity) {
  const Vec2 c = project_extent({16.5, 2.5}, RotationMatrix2::from_angle(0.0));
  EXPECT_DOUBLE_EQ(c.x, 16.5);
  EXPECT_DOUBLE_EQ(c.y, 1.25);
}

TEST(ProjectExtent, QuarterTurnSwaps) {
  const Vec2 c = project_extent({16.5, 2.5}, RotationMatrix2::from_angle(kPi / 2.0));
  EXPECT_NEAR(c.x, -1.25, 1e-12);
  EXPECT_NEAR(c.y, 16.5, 1e-12);
}

TEST(ProjectExtent, MatchesHandMultiply) {
  const double a = 0.2;
  const Vec2 c = project_extent({10.0, 2.0}, RotationMatrix2::from_angle(a));
  EXPECT_NEAR(c.x, std::cos(a) * 10.0 - std::sin(a) * 1.0, 1e-12);
  EXPECT_NEAR(c.y, std::sin(a) * 10.0 + std::cos(a) * 1.0, 1e-12);
}

TEST(TransformVelocity, Examples) {
  const Vec2 same = transform_velocity({20.0, 0.0}, RotationMatrix2::from_angle(0.0));
  EXPECT_DOUBLE_EQ(same.x, 20.0);
  EXPECT_DOUBLE_EQ(same.y, 0.0);
  const Vec2 back = transform_velocity({20.0, 0.0}, RotationMatrix2::from_angle(kPi));
  EXPECT_NEAR(back.x, -20.0, 1e-12);
  EXPECT_NEAR(back.y, 0.0, 1e-12);
  const Vec2 v = transform_velocity({15.0, 1.0}, RotationMatrix2::from_angle(0.3));
  EXPECT_NEAR(v.x, std::cos(0.3) * 15.0 - std::sin(0.3) * 1.0, 1e-12);
  EXPECT_NEAR(v.y, std::sin(0.3) * 15.0 + std::cos(0.3) * 1.0, 1e-12);
}

TEST(ProjectionsAreLinear, RandomScale) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.1, 20.0);
  for (int i = 0; i < 200; ++i) {
    const auto rot = RotationMatrix2::from_angle(u(gen));
    const double k = u(gen);
    const VehicleGeometry g{u(gen), u(gen)};
    const Vec2 c = project_extent(g, rot);
    const Vec2 ck = project_extent({k * g.length, k * g.width}, rot);
    EXPECT_NEAR(ck.x, k * c.x, 1e-9);
    EXPECT_NEAR(ck.y, k * c.y, 1e-9);
    const BodyVelocity v{u(gen), u(gen)};
    const Vec2 tv = transform_velocity(v, rot);
    const Vec2 tvk = transform_velocity({k * v.u, k * v.v}, rot);
    EXPECT_NEAR(tvk.x, k * tv.x, 1e-9);
    EXPECT_NEAR(tvk.y, k * tv.y, 1e-9);
  }
}

TEST(TransformAcceleration, NoYawRate) {
  const Vec2 a = transform_acceleration({1.0, 0.0, 0.0}, {20.0, 0.0}, RotationMatrix2::from_angle(0.0));
  EXPECT_DOUBLE_EQ(a.x, 1.0);
  EXPECT_DOUBLE_EQ(a.y, 0.0);
}

TEST(TransformAcceleration, PureCoriolisTerm) {
  const Vec2 a = transform_acceleration({0.0, 0.0, 0.1}, {20.0, 0.0}, RotationMatrix2::from_angle(0.0));
  EXPECT_NEAR(a.x, 0.0, 1e-15);
  EXPECT_NEAR(a.y, 2.0, 1e-12);
}

TEST(TransformAcceleration, ScalarReevaluation) {
  const double ax = 0.7, ay = -0.4, r = 0.15, u = 13.0, v = 0.6, ang = -0.35;
  const Vec2 a = transform_acceleration({ax, ay, r}, {u, v}, RotationMatrix2::from_angle(ang));
  const double bx = ax - v * r;
  const double by = ay + u * r;
  EXPECT_NEAR(a.x, std::cos(ang) * bx - std::sin(ang) * by, 1e-12);
  EXPECT_NEAR(a.y, std::sin(ang) * bx + std::cos(ang) * by, 1e-12);
}

TEST(TransformAcceleration, ZeroYawRateMatchesVelocityTransform) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const auto rot = RotationMatrix2::from_angle(u(gen));
    const double ax = u(gen), ay = u(gen);
    const Vec2 a = transform_acceleration({ax, ay, 0.0}, {u(gen), u(gen)}, rot);
    const Vec2 b = transform_velocity({ax, ay}, rot);
    EXPECT_DOUBLE_EQ(a.x, b.x);
    EXPECT_DOUBLE_EQ(a.y, b.y);
  }
}

TEST(RelativeOffset, Examples) {
  const Vec2 zero = relative_offset({3.0, 4.0, 0.2}, {3.0, 4.0, 0.2});
  EXPECT_DOUBLE_EQ(zero.x, 0.0);
  EXPECT_DOUBLE_EQ(zero.y, 0.0);
  const Vec2 s = relative_offset({30.0, 3.5, 0.0}, {0.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(s.x, 30.0);
  EXPECT_DOUBLE_EQ(s.y, 3.5);
  const Vec2 q = relative_offset({0.0, 10.0, 0.0}, {0.0, 0.0, kPi / 2.0});
  EXPECT_NEAR(q.x, 10.0, 1e-12);
  EXPECT_NEAR(q.y, 0.0, 1e-12);
}

TEST(RelativeOffset, InvariantUnderRigidMotion) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> pos(-200.0, 200.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const Pose2D lead{pos(gen), pos(gen), ang(gen)};
    const Pose2D follow{pos(gen), pos(gen), ang(gen)};
    const double dx = pos(gen), dy = pos(gen), dpsi = ang(gen);
    const double cx = pos(gen), cy = pos(gen);
    auto move = [&](const Pose2D& p) {
      const double rx = p.x() - cx, ry = p.y() - cy;
      return Pose2D{cx + std::cos(dpsi) * rx - std::sin(dpsi) * ry + dx,
                    cy + std::sin(dpsi) * rx + std::cos(dpsi) * ry + dy, p.psi() + dpsi};
    };
    const Vec2 a = relative_offset(lead, follow);
    const Vec2 b = relative_offset(move(lead), move(follow));
    EXPECT_NEAR(a.x, b.x, 1e-9);
    EXPECT_NEAR(a.y, b.y, 1e-9);
  }
}

}  // namespace
}  // namespace ttc2d
