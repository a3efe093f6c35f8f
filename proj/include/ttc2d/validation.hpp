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

// Randomized measure-vs-oracle comparison.

#ifndef TTC2D_VALIDATION_HPP_
#define TTC2D_VALIDATION_HPP_

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "ttc2d/articulated.hpp"
#include "ttc2d/measures.hpp"
#include "ttc2d/oracle.hpp"
#include "ttc2d/outcome.hpp"

namespace ttc2d {

enum class Version { kGuo, kV1, kV2, kV3 };

inline std::string_view to_string(Version v) {
  switch (v) {
    case Version::kGuo:
      return "guo";
    case Version::kV1:
      return "v1";
    case Version::kV2:
      return "v2";
    case Version::kV3:
      return "v3";
  }
  return "?";
}

inline std::optional<Version> parse_version(std::string_view s) {
  if (s == "guo") return Version::kGuo;
  if (s == "v1") return Version::kV1;
  if (s == "v2") return Version::kV2;
  if (s == "v3") return Version::kV3;
  return std::nullopt;
}

inline bool is_articulated(Version v) { return v == Version::kV2 || v == Version::kV3; }

inline MotionModel oracle_model(Version v) {
  switch (v) {
    case Version::kGuo:
    case Version::kV1:
      return MotionModel::kConstantSpeedHeading;
    case Version::kV2:
      return MotionModel::kArticulatedConstantSpeed;
    case Version::kV3:
      break;
  }
  return MotionModel::kArticulatedConstantAccel;
}

struct ValidationOptions {
  Version version = Version::kV1;
  std::size_t trials = 1000;
  std::uint64_t seed = 7;
  double dt = 0.01;          // measure step
  double oracle_dt = 0.0025;
  double horizon = 10.0;
  double grazing_eps = 0.05;  // footprints grown and shrunk by this much

  void validate() const {
    if (trials < 1) throw DomainError("trials must be at least 1");
    if (!(dt > 0.0) || !(oracle_dt > 0.0) || !(horizon > 0.0)) throw DomainError("steps and horizon must be positive");
    if (oracle_dt > dt / 4.0) throw DomainError("oracle step must be at most a quarter of the measure step");
    if (!(grazing_eps >= 0.0)) throw DomainError("grazing margin must be non-negative");
  }
};

/// Deterministic uniform doubles; the mapping from raw bits is fixed so runs
/// reproduce across standard libraries.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 gen_;
};

/// Per-trial seed: splitmix64 of the base seed and index, so trial `i` does
/// not depend on how many draws earlier trials used.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Scene = std::variant<RigidScene, ArticulatedScene>;

namespace detail {

inline Pose2D place(const Pose2D& frame, double sx, double sy, double dpsi) {
  const Vec2 f = heading_vector(frame.psi());
  const Vec2 n{-f.y, f.x};
  const Vec2 p = frame.position() + sx * f + sy * n;
  return {p.x, p.y, frame.psi() + dpsi};
}

inline RigidScene random_rigid(TrialRng& rng, bool aligned) {
  RigidScene s;
  s.follower.geometry = {rng.uniform(3.5, 6.0), rng.uniform(1.6, 2.2)};
  s.lead.geometry = {rng.uniform(3.5, 18.0), rng.uniform(1.6, 2.6)};
  s.follower.state.pose = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0),
                           rng.uniform(-std::numbers::pi, std::numbers::pi)};
  const double dpsi = aligned ? 0.0 : rng.uniform(-std::numbers::pi / 3.0, std::numbers::pi / 3.0);
  s.lead.state.pose = place(s.follower.state.pose, rng.uniform(0.0, 60.0), rng.uniform(-10.0, 10.0), dpsi);
  s.follower.state.velocity = {rng.uniform(0.0, 30.0), rng.uniform(-1.5, 1.5)};
  s.lead.state.velocity = {rng.uniform(0.0, 30.0), rng.uniform(-1.5, 1.5)};
  return s;
}

inline ArticulatedGeometry random_truck_geometry(TrialRng& rng) {
  ArticulatedGeometry g;
  g.tractor = {rng.uniform(5.5, 7.0), 2.5};
  g.semitrailer = {rng.uniform(10.0, 13.6), 2.55};
  g.front_to_joint = rng.uniform(4.0, 5.0);
  g.trailer_front_to_joint = rng.uniform(1.0, 2.0);
  g.wheelbase = 3.8;
  g.rear_axle_to_joint = rng.uniform(0.3, 0.8);
  g.front_axle_to_joint = g.wheelbase - g.rear_axle_to_joint;
  g.joint_to_trailer_axle = rng.uniform(6.0, 9.0);
  return g;
}

inline ArticulatedScene random_articulated(TrialRng& rng, bool with_accel, double horizon) {
  ArticulatedScene s;
  s.geometry = random_truck_geometry(rng);
  s.car.geometry = {rng.uniform(3.8, 5.0), rng.uniform(1.7, 2.0)};
  s.car.state.pose = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0), rng.uniform(-0.2, 0.2)};
  const double dpsi = rng.uniform(-std::numbers::pi / 3.0, std::numbers::pi / 3.0);
  s.truck.tractor.pose = place(s.car.state.pose, rng.uniform(0.0, 70.0), rng.uniform(-12.0, 12.0), dpsi);
  s.truck.psi1 = s.truck.tractor.pose.psi() + rng.uniform(-0.5, 0.5);
  const double u0 = rng.uniform(0.0, 30.0);
  s.truck.tractor.velocity = {u0, rng.uniform(-0.5, 0.5)};
  s.truck.ub0 = u0;
  s.car.state.velocity = {rng.uniform(0.0, 30.0), rng.uniform(-1.0, 1.0)};
  if (with_accel) {
    // Keep the truck from reversing inside the horizon.
    s.truck.tractor.acceleration = {rng.uniform(std::max(-2.0, -u0 / horizon), 2.0), rng.uniform(-0.5, 0.5),
                                    rng.uniform(-0.1, 0.1)};
    s.car.state.acceleration = {rng.uniform(-3.0, 3.0), rng.uniform(-0.5, 0.5), 0.0};
  }
  return s;
}

template <class S>
bool overlapping_at_start(MotionModel model, const S& scene) {
  return touching_unit(footprints(model, scene, 0.0, 0.0)) >= 0;
}

}  // namespace detail

/// Feasible random configuration for trial `index` (initially separated).
inline Scene random_scene(const ValidationOptions& opt, std::uint64_t index) {
  TrialRng rng(trial_seed(opt.seed, index));
  const MotionModel model = oracle_model(opt.version);
  for (;;) {
    if (is_articulated(opt.version)) {
      ArticulatedScene s = detail::random_articulated(rng, opt.version == Version::kV3, opt.horizon);
      if (!detail::overlapping_at_start(model, s)) return s;
    } else {
      RigidScene s = detail::random_rigid(rng, opt.version == Version::kGuo);
      if (!detail::overlapping_at_start(model, s)) return s;
    }
  }
}

inline TtcOutcome run_measure(Version v, const Scene& scene, double dt, double horizon) {
  SolverConfig cfg;
  cfg.dt = dt;
  cfg.horizon = horizon;
  TtcOutcome out;
  switch (v) {
    case Version::kGuo: {
      const auto& s = std::get<RigidScene>(scene);
      out = ttc2d_baseline({s.lead, s.follower});
      break;
    }
    case Version::kV1: {
      const auto& s = std::get<RigidScene>(scene);
      out = ttc2d_v1({s.lead, s.follower});
      break;
    }
    case Version::kV2: {
      const auto& s = std::get<ArticulatedScene>(scene);
      out = ttc2d_v2(s.truck, s.car, s.geometry, cfg);
      break;
    }
    case Version::kV3: {
      const auto& s = std::get<ArticulatedScene>(scene);
      out = ttc2d_v3(s.truck, s.car, s.geometry, cfg);
      break;
    }
  }
  return detail::cap_to_horizon(out, horizon);
}

inline TtcOutcome run_oracle(Version v, const Scene& scene, const OracleConfig& cfg) {
  return std::visit([&](const auto& s) { return first_contact_time(oracle_model(v), s, cfg); }, scene);
}

/// Every field needed to rebuild the configuration, at full precision.
inline std::string describe(const Scene& scene) {
  std::ostringstream os;
  os << std::setprecision(17);
  auto state = [&os](std::string_view name, const VehicleState& s) {
    os << name << ".pose = " << s.pose.x() << ' ' << s.pose.y() << ' ' << s.pose.psi() << '\n'
       << name << ".velocity = " << s.velocity.u << ' ' << s.velocity.v << '\n'
       << name << ".acceleration = " << s.acceleration.ax << ' ' << s.acceleration.ay << ' '
       << s.acceleration.yaw_rate << '\n';
  };
  auto geom = [&os](std::string_view name, const VehicleGeometry& g) {
    os << name << ".geometry = " << g.length << ' ' << g.width << '\n';
  };
  if (const auto* r = std::get_if<RigidScene>(&scene)) {
    state("lead", r->lead.state);
    geom("lead", r->lead.geometry);
    state("follower", r->follower.state);
    geom("follower", r->follower.geometry);
  } else {
    const auto& a = std::get<ArticulatedScene>(scene);
    state("tractor", a.truck.tractor);
    os << "truck.psi1 = " << a.truck.psi1 << "\ntruck.delta = " << a.truck.delta << "\ntruck.ub0 = " << a.truck.ub0
       << '\n';
    geom("tractor", a.geometry.tractor);
    geom("semitrailer", a.geometry.semitrailer);
    os << "truck.lengths = " << a.geometry.front_to_joint << ' ' << a.geometry.trailer_front_to_joint << ' '
       << a.geometry.wheelbase << ' ' << a.geometry.joint_to_trailer_axle << ' ' << a.geometry.rear_axle_to_joint
       << ' ' << a.geometry.front_axle_to_joint << '\n';
    state("car", a.car.state);
    geom("car", a.car.geometry);
  }
  return os.str();
}

struct TrialResult {
  TtcOutcome measure;
  TtcOutcome oracle;
  bool grazing = false;
  bool agrees = false;   // same finite / no-collision verdict
  double deviation = 0;  // |measure - oracle| when both finite
};

inline TrialResult run_trial(const ValidationOptions& opt, const Scene& scene) {
  OracleConfig oc;
  oc.dt = opt.oracle_dt;
  oc.horizon = opt.horizon;
  TrialResult r;
  r.measure = run_measure(opt.version, scene, opt.dt, opt.horizon);
  r.oracle = run_oracle(opt.version, scene, oc);
  oc.margin = opt.grazing_eps;
  const bool grown = run_oracle(opt.version, scene, oc).collides();
  oc.margin = -opt.grazing_eps;
  const bool shrunk = run_oracle(opt.version, scene, oc).collides();
  r.grazing = grown != shrunk;
  r.agrees = r.measure.valid && r.measure.collides() == r.oracle.collides();
  if (r.measure.collides() && r.oracle.collides()) r.deviation = std::abs(r.measure.time - r.oracle.time);
  return r;
}

struct ValidationReport {
  Version version = Version::kV1;
  std::size_t trials = 0;
  std::size_t grazing = 0;
  std::size_t compared = 0;  // outside the grazing band
  std::size_t agreements = 0;
  std::size_t both_finite = 0;
  double max_abs_dev = 0.0;
  double mean_abs_dev = 0.0;
  double tolerance = 0.0;
  double min_agreement = 0.99;
  std::optional<std::size_t> worst_index;
  std::string worst_config;
  TrialResult worst;

  double agreement_rate() const {
    return compared == 0 ? 1.0 : static_cast<double>(agreements) / static_cast<double>(compared);
  }
  bool passed() const { return agreement_rate() >= min_agreement && max_abs_dev <= tolerance; }
};

/// Runs `opt.trials` configurations in index order.
inline ValidationReport validate_measure(const ValidationOptions& opt) {
  opt.validate();
  ValidationReport rep;
  rep.version = opt.version;
  rep.trials = opt.trials;
  rep.tolerance = 2.0 * std::max(opt.dt, opt.oracle_dt);
  double dev_sum = 0.0;
  bool worst_is_disagreement = false;
  for (std::size_t i = 0; i < opt.trials; ++i) {
    const Scene scene = random_scene(opt, i);
    const TrialResult r = run_trial(opt, scene);
    if (r.grazing) {
      ++rep.grazing;
      continue;
    }
    ++rep.compared;
    bool worse = false;
    if (r.agrees) {
      ++rep.agreements;
      if (r.measure.collides()) {
        ++rep.both_finite;
        dev_sum += r.deviation;
        if (r.deviation > rep.max_abs_dev) {
          rep.max_abs_dev = r.deviation;
          worse = !worst_is_disagreement;
        }
      }
    } else if (!worst_is_disagreement) {
      worst_is_disagreement = true;
      worse = true;
    }
    if (worse) {
      rep.worst_index = i;
      rep.worst_config = describe(scene);
      rep.worst = r;
    }
  }
  rep.mean_abs_dev = rep.both_finite == 0 ? 0.0 : dev_sum / static_cast<double>(rep.both_finite);
  return rep;
}

}  // namespace ttc2d

#endif  // TTC2D_VALIDATION_HPP_
