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

#include "ttc2d/yawkin.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "ttc2d/scenario.hpp"

namespace ttc2d {
namespace {

ArticulatedGeometry geometry() { return default_truck_geometry(); }

// RK4 on d(psi1)/dt = -(u(t) / l1) sin(psi1 - psi0) with psi0 fixed.
double rk4_trailer_yaw(double psi1, double psi0, double l1, const std::function<double(double)>& speed, double t_end,
                       double h) {
  auto f = [&](double t, double y) { return -(speed(t) / l1) * std::sin(y - psi0); };
  const int n = static_cast<int>(std::lround(t_end / h));
  double t = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k1 = f(t, psi1);
    const double k2 = f(t + 0.5 * h, psi1 + 0.5 * h * k1);
    const double k3 = f(t + 0.5 * h, psi1 + 0.5 * h * k2);
    const double k4 = f(t + h, psi1 + h * k3);
    psi1 += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
  }
  return psi1;
}

TEST(TractorYawRate, Examples) {
  EXPECT_DOUBLE_EQ(tractor_yaw_rate(10.0, 0.0, 4.0), 0.0);
  EXPECT_NEAR(tractor_yaw_rate(10.0, 0.1, 4.0), 0.250836, 1e-6);
  EXPECT_DOUBLE_EQ(tractor_yaw_rate(10.0, -0.1, 4.0), -tractor_yaw_rate(10.0, 0.1, 4.0));
  EXPECT_THROW(tractor_yaw_rate(10.0, std::numbers::pi / 2.0, 4.0), DomainError);
  EXPECT_THROW(tractor_yaw_rate(10.0, 0.1, 0.0), DomainError);
}

TEST(SemitrailerYawRate, Examples) {
  ArticulatedGeometry g = geometry();
  EXPECT_DOUBLE_EQ(semitrailer_yaw_rate(10.0, 0.0, 0.3, 0.3, g), 0.0);
  g.joint_to_trailer_axle = 8.0;
  EXPECT_NEAR(semitrailer_yaw_rate(10.0, 0.0, 0.0, 0.2, g), -1.25 * std::sin(0.2), 1e-12);
  const double u = 12.0, d = 0.07, p0 = 0.4, p1 = 0.25;
  const double expect = (u * std::tan(d) / g.wheelbase) * (g.rear_axle_to_joint / g.joint_to_trailer_axle) *
                            std::cos(p1 - p0) -
                        (u / g.joint_to_trailer_axle) * std::sin(p1 - p0);
  EXPECT_NEAR(semitrailer_yaw_rate(u, d, p0, p1, g), expect, 1e-12);
}

TEST(SemitrailerYawConstantSpeed, FixedPoint) {
  for (double t : {0.0, 1.0, 50.0}) {
    EXPECT_DOUBLE_EQ(semitrailer_yaw_constant_speed(0.3, 0.3, 20.0, 8.0, t, 0.3), 0.3);
  }
}

TEST(SemitrailerYawConstantSpeed, OneTimeConstant) {
  // u/l1 = 1, offset 0.2 after 1 s
  const double psi1 = semitrailer_yaw_constant_speed(0.2, 0.0, 8.0, 8.0, 1.0, 0.2);
  EXPECT_NEAR(psi1, 2.0 * std::atan(std::tan(0.1) * std::exp(-1.0)), 1e-12);
  EXPECT_NEAR(psi1, 0.07379, 1e-5);
  const double ref = rk4_trailer_yaw(0.2, 0.0, 8.0, [](double) { return 8.0; }, 1.0, 1e-4);
  EXPECT_NEAR(psi1, ref, 1e-9);
}

TEST(SemitrailerYawConstantSpeed, DecaysMonotonicallyAndKeepsSign) {
  for (double off : {-0.5, -0.1, 0.1, 0.5}) {
    double prev = off;
    for (int k = 1; k <= 200; ++k) {
      const double psi1 = semitrailer_yaw_constant_speed(1.0 + off, 1.0, 15.0, 7.5, 0.1 * k, 1.0 + off);
      const double now = psi1 - 1.0;
      EXPECT_LE(std::abs(now), std::abs(prev) + 1e-15);
      if (std::abs(now) > 1e-12) {
        EXPECT_EQ(std::signbit(now), std::signbit(off));
      }
      prev = now;
    }
    EXPECT_LT(std::abs(prev), 1e-10);
  }
}

TEST(SemitrailerYawConstantSpeed, MatchesRk4RandomOffsets) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> off(-0.5, 0.5);
  std::uniform_real_distribution<double> speed(0.0, 30.0);
  std::uniform_real_distribution<double> len(5.0, 12.0);
  for (int i = 0; i < 20; ++i) {
    const double o = off(gen), u = speed(gen), l1 = len(gen);
    const double ref = rk4_trailer_yaw(0.1 + o, 0.1, l1, [u](double) { return u; }, 20.0, 1e-3);
    EXPECT_NEAR(semitrailer_yaw_constant_speed(0.1 + o, 0.1, u, l1, 20.0, 0.1 + o), ref, 1e-4);
  }
}

TEST(SemitrailerYawConstantSpeed, RejectsBadInput) {
  EXPECT_THROW(semitrailer_yaw_constant_speed(0.1, 0.0, -1.0, 8.0, 1.0, 0.1), DomainError);
  EXPECT_THROW(semitrailer_yaw_constant_speed(0.1, 0.0, 1.0, 0.0, 1.0, 0.1), DomainError);
}

TEST(SemitrailerYawVariableSpeed, ZeroDisplacementKeepsOffset) {
  EXPECT_NEAR(semitrailer_yaw_variable_speed(0.3, 0.1, 5.0, 5.0, 0.1, 8.0, 0.3), 0.3, 1e-15);
}

TEST(SemitrailerYawVariableSpeed, ReducesToConstantSpeedForm) {
  const double dx = 37.0;
  const double a = semitrailer_yaw_variable_speed(0.25, 0.0, 0.0, dx, 0.0, 8.0, 0.25);
  const double b = semitrailer_yaw_constant_speed(0.25, 0.0, dx / 2.0, 8.0, 2.0, 0.25);
  EXPECT_NEAR(a, b, 1e-14);
}

TEST(SemitrailerYawVariableSpeed, MatchesRk4AcceleratingAxle) {
  const double psi0 = 0.3, l1 = 8.0, u0 = 5.0, acc = 1.2, t = 8.0;
  const double ref = rk4_trailer_yaw(psi0 - 0.4, psi0, l1, [&](double s) { return u0 + acc * s; }, t, 1e-3);
  const double travelled = u0 * t + 0.5 * acc * t * t;
  const double closed = semitrailer_yaw_variable_speed(psi0 - 0.4, psi0, 2.0, 2.0 + travelled * std::cos(psi0), psi0,
                                                       l1, psi0 - 0.4);
  EXPECT_NEAR(closed, ref, 1e-3);
}

TEST(SemitrailerYawVariableSpeed, SingularHeading) {
  EXPECT_THROW(semitrailer_yaw_variable_speed(1.5, std::numbers::pi / 2.0, 0.0, 1.0, std::numbers::pi / 2.0, 8.0, 1.5),
               DomainError);
}

TEST(Jackknife, Limit) {
  EXPECT_FALSE(jackknifed(0.0, 1.5));
  EXPECT_TRUE(jackknifed(0.0, std::numbers::pi / 2.0));
  EXPECT_TRUE(jackknifed(3.0, 3.0 + 1.7 - 2.0 * std::numbers::pi));
}

TEST(KinematicStepper, StraightRoad) {
  const ArticulatedGeometry g = geometry();
  KinematicState s;
  s.rear_axle = {1.0, 2.0};
  s.psi0 = s.psi1 = 0.4;
  for (int i = 0; i < 100; ++i) s = step_kinematic_model(s, 10.0, 0.0, g, 0.01);
  EXPECT_NEAR(s.rear_axle.x, 1.0 + 10.0 * std::cos(0.4), 1e-9);
  EXPECT_NEAR(s.rear_axle.y, 2.0 + 10.0 * std::sin(0.4), 1e-9);
  EXPECT_DOUBLE_EQ(s.psi0, 0.4);
  EXPECT_DOUBLE_EQ(s.psi1, 0.4);
}

TEST(KinematicStepper, CurvatureMatchesSteering) {
  const ArticulatedGeometry g = geometry();
  const double delta = 0.05, u = 5.0, dt = 0.001;
  KinematicState s;
  std::vector<std::pair<double, double>> path;
  for (int i = 0; i < 20000; ++i) {
    if (i % 500 == 0) path.emplace_back(s.rear_axle.x, s.rear_axle.y);
    s = step_kinematic_model(s, u, delta, g, dt);
  }
  // circle through three well-spread points
  const auto [x1, y1] = path[0];
  const auto [x2, y2] = path[path.size() / 3];
  const auto [x3, y3] = path[2 * path.size() / 3];
  const double a = x1 * (y2 - y3) - y1 * (x2 - x3) + x2 * y3 - x3 * y2;
  const double b1 = (x1 * x1 + y1 * y1) * (y3 - y2) + (x2 * x2 + y2 * y2) * (y1 - y3) + (x3 * x3 + y3 * y3) * (y2 - y1);
  const double c1 = (x1 * x1 + y1 * y1) * (x2 - x3) + (x2 * x2 + y2 * y2) * (x3 - x1) + (x3 * x3 + y3 * y3) * (x1 - x2);
  const double cx = -b1 / (2.0 * a), cy = -c1 / (2.0 * a);
  const double r = std::hypot(x1 - cx, y1 - cy);
  EXPECT_NEAR(1.0 / r, std::tan(delta) / g.wheelbase, 2e-4);
}

// Residuals of the no-side-slip constraints at the three axles, velocities by
// central differences.
struct Residuals {
  double front = 0.0;
  double rear = 0.0;
  double trailer = 0.0;
};

Residuals max_residuals(double dt) {
  const ArticulatedGeometry g = geometry();
  CutInConfig cfg = default_cutin_config();
  cfg.dt = dt;
  std::vector<KinematicState> states;
  std::vector<double> deltas;
  KinematicState s;
  const int n = static_cast<int>(std::lround(20.0 / dt));
  for (int k = 0; k <= n; ++k) {
    const double t = k * dt;
    states.push_back(s);
    deltas.push_back(cfg.steering(t));
    s = step_kinematic_model(s, cfg.truck_speed.value(t), cfg.steering(t), g, dt);
  }
  Residuals r;
  for (std::size_t k = 1; k + 1 < states.size(); ++k) {
    const auto& a = states[k - 1];
    const auto& b = states[k + 1];
    const auto& c = states[k];
    auto lateral = [&](AxleState p0, AxleState p1, double heading) {
      const double vx = (p1.x - p0.x) / (2.0 * dt), vy = (p1.y - p0.y) / (2.0 * dt);
      return std::abs(-std::sin(heading) * vx + std::cos(heading) * vy);
    };
    r.rear = std::max(r.rear, lateral(a.rear_axle, b.rear_axle, c.psi0));
    r.front = std::max(r.front, lateral(a.front_axle(g), b.front_axle(g), c.psi0 + deltas[k]));
    r.trailer = std::max(r.trailer, lateral(a.trailer_axle(g), b.trailer_axle(g), c.psi1));
  }
  return r;
}

TEST(KinematicStepper, NonHolonomicResidualsFirstOrder) {
  const Residuals coarse = max_residuals(0.01);
  const Residuals fine = max_residuals(0.005);
  for (auto [c, f] : {std::pair{coarse.front, fine.front}, std::pair{coarse.rear, fine.rear},
                      std::pair{coarse.trailer, fine.trailer}}) {
    EXPECT_LT(c, 0.05);
    if (c > 1e-9) {
      EXPECT_NEAR(f / c, 0.5, 0.1);
    }
  }
}

TEST(KinematicStepper, JointDistancesRigid) {
  const ArticulatedGeometry g = geometry();
  KinematicState s;
  s.psi1 = 0.1;
  for (int i = 0; i < 3000; ++i) {
    s = step_kinematic_model(s, 12.0, 0.03 * std::sin(0.002 * i), g, 0.01);
    const AxleState c = s.joint(g);
    const AxleState r = s.rear_axle;
    const AxleState t = s.trailer_axle(g);
    EXPECT_NEAR(std::hypot(c.x - r.x, c.y - r.y), g.rear_axle_to_joint, 1e-9);
    EXPECT_NEAR(std::hypot(c.x - t.x, c.y - t.y), g.joint_to_trailer_axle, 1e-9);
  }
}

TEST(KinematicStepper, JackknifeGuard) {
  const ArticulatedGeometry g = geometry();
  KinematicState s;
  s.psi1 = 1.6;
  EXPECT_THROW(step_kinematic_model(s, 10.0, 0.0, g, 0.01), DomainError);
  s.psi1 = 0.0;
  EXPECT_THROW(step_kinematic_model(s, 10.0, 0.0, g, 0.0), DomainError);
}

}  // namespace
}  // namespace ttc2d
