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

// Kinematic cut-in scenario: a tractor-semitrailer in the left lane drifts
// right into a car that starts later and overtakes it in the right lane.
// Also trajectory CSV input/output and per-unit distance series.

#ifndef TTC2D_SCENARIO_HPP_
#define TTC2D_SCENARIO_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ttc2d/articulated.hpp"
#include "ttc2d/frames.hpp"
#include "ttc2d/measures.hpp"
#include "ttc2d/oracle.hpp"
#include "ttc2d/outcome.hpp"
#include "ttc2d/yawkin.hpp"

namespace ttc2d {

/// Malformed scenario file or trajectory.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_double(std::string_view text, std::string_view what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw FormatError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace detail

/// Piecewise-linear function of time, held constant outside its breakpoints.
class PiecewiseLinear {
 public:
  struct Point {
    double t;
    double value;
  };

  PiecewiseLinear() = default;
  explicit PiecewiseLinear(std::vector<Point> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) throw DomainError("profile needs at least one point");
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      require_finite(pts_[i].t, "profile time");
      require_finite(pts_[i].value, "profile value");
      if (i > 0 && !(pts_[i].t > pts_[i - 1].t)) throw DomainError("profile times must increase");
    }
  }

  /// Parses "t:v, t:v, ...".
  static PiecewiseLinear parse(std::string_view text) {
    std::vector<Point> pts;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view item = text.substr(start, end - start);
      const std::size_t colon = item.find(':');
      if (colon == std::string_view::npos) throw FormatError("profile entry '" + std::string(item) + "' lacks ':'");
      pts.push_back({detail::parse_double(item.substr(0, colon), "profile time"),
                     detail::parse_double(item.substr(colon + 1), "profile value")});
      start = end + 1;
    }
    try {
      return PiecewiseLinear(std::move(pts));
    } catch (const DomainError& e) {
      throw FormatError(e.what());
    }
  }

  double value(double t) const {
    if (pts_.empty()) return 0.0;
    if (t <= pts_.front().t) return pts_.front().value;
    if (t >= pts_.back().t) return pts_.back().value;
    const auto it = std::upper_bound(pts_.begin(), pts_.end(), t, [](double x, const Point& p) { return x < p.t; });
    const Point& b = *it;
    const Point& a = *(it - 1);
    return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t);
  }

  /// Right derivative; zero outside the breakpoints.
  double slope(double t) const {
    if (pts_.size() < 2 || t < pts_.front().t || t >= pts_.back().t) return 0.0;
    const auto it = std::upper_bound(pts_.begin(), pts_.end(), t, [](double x, const Point& p) { return x < p.t; });
    const Point& b = *it;
    const Point& a = *(it - 1);
    return (b.value - a.value) / (b.t - a.t);
  }

  const std::vector<Point>& points() const { return pts_; }

  std::string to_string() const {
    std::ostringstream os;
    os << std::setprecision(17);
    for (std::size_t i = 0; i < pts_.size(); ++i) os << (i ? ", " : "") << pts_[i].t << ':' << pts_[i].value;
    return os.str();
  }

 private:
  std::vector<Point> pts_;
};

struct CutInConfig {
  // Truck, left lane. Speed is the tractor rear-axle speed vs absolute time.
  PiecewiseLinear truck_speed{{{0.0, 0.0}}};
  double truck_x0 = 0.0;  // tractor front edge
  double lane_offset = 3.5;
  ArticulatedGeometry truck_geometry;

  // Car, right lane (Y = 0), heading along X. Acceleration is given vs time
  // since the car starts.
  double car_start_delay = 10.0;
  PiecewiseLinear car_accel{{{0.0, 0.0}}};
  double car_x0 = 0.0;  // car front edge
  VehicleGeometry car_geometry{4.5, 1.8};

  // Steering pulse amplitude * sin^2, positive to the left.
  double cutin_start = 0.0;
  double steer_amplitude = 0.0;
  double steer_duration = 1.0;

  double dt = 0.01;
  double duration = 20.0;

  void validate() const {
    truck_geometry.validate();
    car_geometry.validate();
    for (const auto& p : truck_speed.points()) {
      if (p.value < 0.0) throw DomainError("truck speed profile must be non-negative");
    }
    if (!(car_start_delay >= 0.0)) throw DomainError("car start delay must be non-negative");
    if (!(steer_duration > 0.0)) throw DomainError("steering pulse duration must be positive");
    if (!(std::abs(steer_amplitude) < 0.5 * std::numbers::pi)) throw DomainError("steering amplitude too large");
    if (!(dt > 0.0) || !(duration > 0.0) || !(dt <= duration)) throw DomainError("dt and duration must be positive");
    for (double v : {truck_x0, lane_offset, car_x0, cutin_start}) require_finite(v, "scenario value");
  }

  double steering(double t) const {
    const double s = (t - cutin_start) / steer_duration;
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double k = std::sin(std::numbers::pi * s);
    return steer_amplitude * k * k;
  }

  double steering_rate(double t) const {
    const double s = (t - cutin_start) / steer_duration;
    if (s <= 0.0 || s >= 1.0) return 0.0;
    return steer_amplitude * std::numbers::pi / steer_duration * std::sin(2.0 * std::numbers::pi * s);
  }
};

inline ArticulatedGeometry default_truck_geometry() {
  ArticulatedGeometry g;
  g.tractor = {6.0, 2.5};
  g.semitrailer = {13.6, 2.55};
  g.front_to_joint = 4.7;
  g.trailer_front_to_joint = 1.6;
  g.wheelbase = 3.8;
  g.joint_to_trailer_axle = 8.0;
  g.rear_axle_to_joint = 0.5;
  g.front_axle_to_joint = 3.3;
  return g;
}

/// Calibrated reconstruction; configs/cutin_default.ini carries the same values.
inline CutInConfig default_cutin_config() {
  CutInConfig c;
  c.truck_speed = PiecewiseLinear({{0.0, 0.0}, {8.0, 8.7}});
  c.truck_x0 = 0.0;
  c.lane_offset = 3.5;
  c.truck_geometry = default_truck_geometry();
  c.car_start_delay = 10.0;
  c.car_accel = PiecewiseLinear({{0.0, 3.2}, {2.5, 3.2}, {4.0, 0.0}});
  c.car_x0 = 41.6;
  c.car_geometry = {4.5, 1.8};
  c.cutin_start = 11.0;
  c.steer_amplitude = -0.011;
  c.steer_duration = 2.7;
  c.dt = 0.01;
  c.duration = 20.0;
  return c;
}

namespace detail {

inline const std::map<std::string, std::set<std::string>>& scenario_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"truck",
       {"speed_profile", "x0", "lane_offset", "tractor_length", "tractor_width", "trailer_length", "trailer_width",
        "front_to_joint", "trailer_front_to_joint", "wheelbase", "joint_to_trailer_axle", "rear_axle_to_joint",
        "front_axle_to_joint"}},
      {"car", {"start_delay", "accel_profile", "x0", "length", "width"}},
      {"cutin", {"start", "amplitude", "duration"}},
      {"sim", {"dt", "duration"}},
  };
  return keys;
}

}  // namespace detail

/// Reads an INI scenario. Keys left out keep the calibrated defaults.
inline CutInConfig parse_cutin_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw FormatError(std::string("scenario: ") + e.what());
  }
  const auto& known = detail::scenario_keys();
  for (const auto& [section, body] : tree) {
    const auto it = known.find(section);
    if (it == known.end()) throw FormatError("scenario: unknown section [" + section + "]");
    if (!body.data().empty()) throw FormatError("scenario: top-level key '" + section + "' outside a section");
    for (const auto& [key, leaf] : body) {
      if (!it->second.count(key)) throw FormatError("scenario: unknown key '" + key + "' in [" + section + "]");
    }
  }

  CutInConfig c = default_cutin_config();
  auto num = [&tree](const std::string& path, double& out) {
    if (const auto v = tree.get_optional<std::string>(path)) out = detail::parse_double(*v, path);
  };
  auto profile = [&tree](const std::string& path, PiecewiseLinear& out) {
    if (const auto v = tree.get_optional<std::string>(path)) out = PiecewiseLinear::parse(*v);
  };
  ArticulatedGeometry& g = c.truck_geometry;
  profile("truck.speed_profile", c.truck_speed);
  num("truck.x0", c.truck_x0);
  num("truck.lane_offset", c.lane_offset);
  num("truck.tractor_length", g.tractor.length);
  num("truck.tractor_width", g.tractor.width);
  num("truck.trailer_length", g.semitrailer.length);
  num("truck.trailer_width", g.semitrailer.width);
  num("truck.front_to_joint", g.front_to_joint);
  num("truck.trailer_front_to_joint", g.trailer_front_to_joint);
  num("truck.wheelbase", g.wheelbase);
  num("truck.joint_to_trailer_axle", g.joint_to_trailer_axle);
  num("truck.rear_axle_to_joint", g.rear_axle_to_joint);
  num("truck.front_axle_to_joint", g.front_axle_to_joint);
  num("car.start_delay", c.car_start_delay);
  profile("car.accel_profile", c.car_accel);
  num("car.x0", c.car_x0);
  num("car.length", c.car_geometry.length);
  num("car.width", c.car_geometry.width);
  num("cutin.start", c.cutin_start);
  num("cutin.amplitude", c.steer_amplitude);
  num("cutin.duration", c.steer_duration);
  num("sim.dt", c.dt);
  num("sim.duration", c.duration);
  try {
    c.validate();
  } catch (const DomainError& e) {
    throw FormatError(std::string("scenario: ") + e.what());
  }
  return c;
}

inline CutInConfig load_cutin_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open scenario file '" + path + "'");
  return parse_cutin_config(in);
}

struct TrajectorySample {
  double t = 0.0;
  VehicleState car;
  ArticulatedState truck;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;

  double dt() const { return samples.size() < 2 ? 0.0 : samples[1].t - samples[0].t; }

  void validate() const {
    if (samples.empty()) throw DomainError("trajectory is empty");
    const double step = dt();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const TrajectorySample& s = samples[i];
      require_finite(s.t, "time");
      s.car.validate();
      s.truck.validate();
      if (i == 0) continue;
      const double d = s.t - samples[i - 1].t;
      if (!(d > 0.0)) throw DomainError("timestamps must increase strictly");
      if (std::abs(d - step) > 1e-6 * std::max(1.0, step)) throw DomainError("time step is not uniform");
    }
  }
};

/// Simulates both actors with forward-Euler steps of `cfg.dt`.
inline Trajectory generate_cutin(const CutInConfig& cfg) {
  cfg.validate();
  const ArticulatedGeometry& g = cfg.truck_geometry;
  const double arm = g.rear_axle_to_front();
  const auto n = static_cast<std::size_t>(std::floor(cfg.duration / cfg.dt + 0.5)) + 1;

  KinematicState kin;
  kin.rear_axle = {cfg.truck_x0 - arm, cfg.lane_offset};
  double car_x = cfg.car_x0;
  double car_u = 0.0;
  auto car_accel = [&cfg](double t, double u) {
    if (t < cfg.car_start_delay) return 0.0;
    const double a = cfg.car_accel.value(t - cfg.car_start_delay);
    return (u <= 0.0 && a < 0.0) ? 0.0 : a;
  };

  Trajectory traj;
  traj.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    const double ub0 = cfg.truck_speed.value(t);
    const double ub0_rate = cfg.truck_speed.slope(t);
    const double delta = cfg.steering(t);
    const double delta_rate = cfg.steering_rate(t);
    const double yaw_rate = tractor_yaw_rate(ub0, delta, g.wheelbase);
    const double cd = std::cos(delta);
    const double yaw_accel = (ub0_rate * std::tan(delta) + ub0 * delta_rate / (cd * cd)) / g.wheelbase;

    TrajectorySample s;
    s.t = t;
    s.truck.tractor.pose = kin.tractor_front(g);
    s.truck.tractor.velocity = {ub0, yaw_rate * arm};
    s.truck.tractor.acceleration = {ub0_rate, yaw_accel * arm, yaw_rate};
    s.truck.psi1 = kin.psi1;
    s.truck.delta = delta;
    s.truck.ub0 = ub0;
    const double a_car = car_accel(t, car_u);
    s.car.pose = {car_x, 0.0, 0.0};
    s.car.velocity = {car_u, 0.0};
    s.car.acceleration = {a_car, 0.0, 0.0};
    traj.samples.push_back(s);
    if (k + 1 == n) break;

    try {
      kin = step_kinematic_model(kin, ub0, delta, g, cfg.dt);
    } catch (const DomainError& e) {
      std::ostringstream os;
      os << "cut-in simulation left the kinematic model at t = " << t << " s (psi0 = " << kin.psi0
         << ", psi1 = " << kin.psi1 << "): " << e.what();
      throw DomainError(os.str());
    }
    const double a_next = car_accel(t + cfg.dt, car_u + a_car * cfg.dt);
    const double u_next = std::max(0.0, car_u + 0.5 * (a_car + a_next) * cfg.dt);
    car_x += 0.5 * (car_u + u_next) * cfg.dt;
    car_u = u_next;
  }
  return traj;
}

/// Actual first contact along a trajectory (sample resolution).
struct ContactEvent {
  double t = 0.0;
  Direction direction = Direction::kNone;
  Unit unit = Unit::kSingle;
};

namespace detail {

inline OrientedRect car_rect(const TrajectorySample& s, const VehicleGeometry& car) {
  return {s.car.pose, car.length, car.width};
}

inline std::array<OrientedRect, 2> truck_rects(const TrajectorySample& s, const ArticulatedGeometry& g) {
  return {OrientedRect{s.truck.tractor.pose, g.tractor.length, g.tractor.width},
          OrientedRect{s.truck.trailer_front(g), g.semitrailer.length, g.semitrailer.width}};
}

}  // namespace detail

inline std::optional<ContactEvent> first_contact(const Trajectory& traj, const ArticulatedGeometry& g,
                                                 const VehicleGeometry& car) {
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    const OrientedRect c = detail::car_rect(s, car);
    const auto units = detail::truck_rects(s, g);
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (!rects_overlap(c, units[u])) continue;
      const auto& before = traj.samples[i == 0 ? 0 : i - 1];
      const Direction d = contact_direction(detail::car_rect(before, car), detail::truck_rects(before, g)[u]);
      return ContactEvent{s.t, d, u == 0 ? Unit::kTractor : Unit::kSemitrailer};
    }
  }
  return std::nullopt;
}

struct UnitDistance {
  double lon = 0.0;  // unit rear edge minus car rear edge along the car X axis
  double lat = 0.0;  // side separation on the car Y axis, zero once they touch
};

struct DistanceSample {
  double t = 0.0;
  UnitDistance tractor;
  UnitDistance semitrailer;
};

inline UnitDistance unit_distance(const OrientedRect& car, const OrientedRect& unit) {
  const Vec2 f = heading_vector(car.front.psi());
  const Vec2 n{-f.y, f.x};
  const Vec2 car_rear = car.front.position() - car.length * f;
  const Vec2 unit_rear = unit.front.position() - unit.length * heading_vector(unit.front.psi());
  UnitDistance d;
  d.lon = dot(unit_rear - car_rear, f);
  const auto [clo, chi] = detail::project(car.corners(), n);
  const auto [ulo, uhi] = detail::project(unit.corners(), n);
  d.lat = std::max({0.0, ulo - chi, clo - uhi});
  return d;
}

inline std::vector<DistanceSample> distance_series(const Trajectory& traj, const ArticulatedGeometry& g,
                                                   const VehicleGeometry& car) {
  std::vector<DistanceSample> out;
  out.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    const OrientedRect c = detail::car_rect(s, car);
    const auto units = detail::truck_rects(s, g);
    out.push_back({s.t, unit_distance(c, units[0]), unit_distance(c, units[1])});
  }
  return out;
}

inline constexpr std::string_view kTrajectoryHeader =
    "t,car_x,car_y,car_psi,car_u,car_v,car_ax,car_ay,trk_x,trk_y,psi0,trk_u,trk_v,trk_ax,trk_ay,psi1,delta,ub0";

inline void write_trajectory(std::ostream& os, const Trajectory& traj) {
  os << kTrajectoryHeader << '\n' << std::setprecision(17);
  for (const auto& s : traj.samples) {
    const VehicleState& c = s.car;
    const VehicleState& k = s.truck.tractor;
    os << s.t << ',' << c.pose.x() << ',' << c.pose.y() << ',' << c.pose.psi() << ',' << c.velocity.u << ','
       << c.velocity.v << ',' << c.acceleration.ax << ',' << c.acceleration.ay << ',' << k.pose.x() << ','
       << k.pose.y() << ',' << k.pose.psi() << ',' << k.velocity.u << ',' << k.velocity.v << ','
       << k.acceleration.ax << ',' << k.acceleration.ay << ',' << s.truck.psi1 << ',' << s.truck.delta << ','
       << s.truck.ub0 << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(',', start);
    out.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

/// Central differences inside, one-sided at the ends.
inline std::vector<double> differentiate(const std::vector<double>& x, double dt) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  d.front() = (x[1] - x[0]) / dt;
  d.back() = (x[n - 1] - x[n - 2]) / dt;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (x[i + 1] - x[i - 1]) / (2.0 * dt);
  return d;
}

}  // namespace detail

/// Parses a trajectory CSV. Acceleration columns are optional and derived
/// from the speeds when absent. Yaw rates are left at zero; see
/// attach_yaw_rates.
inline Trajectory parse_trajectory(std::istream& in) {
  static const std::vector<std::string> kRequired{"t",     "car_x", "car_y", "car_psi", "car_u", "car_v",
                                                  "trk_x", "trk_y", "psi0",  "trk_u",   "trk_v", "psi1",
                                                  "delta", "ub0"};
  static const std::vector<std::string> kOptional{"car_ax", "car_ay", "trk_ax", "trk_ay"};
  std::string line;
  if (!std::getline(in, line)) throw FormatError("trajectory: missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::map<std::string, std::size_t> col;
  const auto names = detail::split_csv(line);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string name(names[i]);
    const bool known = std::find(kRequired.begin(), kRequired.end(), name) != kRequired.end() ||
                       std::find(kOptional.begin(), kOptional.end(), name) != kOptional.end();
    if (!known) throw FormatError("trajectory: unknown column '" + name + "'");
    if (!col.emplace(name, i).second) throw FormatError("trajectory: duplicate column '" + name + "'");
  }
  for (const auto& name : kRequired) {
    if (!col.count(name)) throw FormatError("trajectory: missing required column '" + name + "'");
  }
  std::size_t present_acc = 0;
  for (const auto& name : kOptional) present_acc += col.count(name);
  if (present_acc != 0 && present_acc != kOptional.size()) {
    throw FormatError("trajectory: acceleration columns must be all present or all absent");
  }
  const bool has_acc = present_acc == kOptional.size();

  Trajectory traj;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = detail::split_csv(line);
    if (cells.size() != names.size()) {
      throw FormatError("trajectory: row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                        " fields, expected " + std::to_string(names.size()));
    }
    auto get = [&](const std::string& name) {
      const std::string where = "trajectory: row " + std::to_string(row) + ", column '" + name + "'";
      const double v = detail::parse_double(cells[col.at(name)], where);
      if (!std::isfinite(v)) throw FormatError(where + ": value must be finite");
      return v;
    };
    TrajectorySample s;
    s.t = get("t");
    s.car.pose = {get("car_x"), get("car_y"), get("car_psi")};
    s.car.velocity = {get("car_u"), get("car_v")};
    s.truck.tractor.pose = {get("trk_x"), get("trk_y"), get("psi0")};
    s.truck.tractor.velocity = {get("trk_u"), get("trk_v")};
    s.truck.psi1 = get("psi1");
    s.truck.delta = get("delta");
    s.truck.ub0 = get("ub0");
    if (has_acc) {
      s.car.acceleration = {get("car_ax"), get("car_ay"), 0.0};
      s.truck.tractor.acceleration = {get("trk_ax"), get("trk_ay"), 0.0};
    }
    if (!traj.samples.empty() && !(s.t > traj.samples.back().t)) {
      throw FormatError("trajectory: row " + std::to_string(row) + ", column 't': timestamps must increase");
    }
    traj.samples.push_back(s);
  }
  if (traj.samples.empty()) throw FormatError("trajectory: no data rows");
  try {
    traj.validate();
  } catch (const DomainError& e) {
    throw FormatError(std::string("trajectory: ") + e.what());
  }

  if (!has_acc && traj.samples.size() > 1) {
    const double dt = traj.dt();
    std::vector<double> cu, cv, tu, tv;
    for (const auto& s : traj.samples) {
      cu.push_back(s.car.velocity.u);
      cv.push_back(s.car.velocity.v);
      tu.push_back(s.truck.tractor.velocity.u);
      tv.push_back(s.truck.tractor.velocity.v);
    }
    const auto cax = detail::differentiate(cu, dt);
    const auto cay = detail::differentiate(cv, dt);
    const auto tax = detail::differentiate(tu, dt);
    const auto tay = detail::differentiate(tv, dt);
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
      traj.samples[i].car.acceleration.ax = cax[i];
      traj.samples[i].car.acceleration.ay = cay[i];
      traj.samples[i].truck.tractor.acceleration.ax = tax[i];
      traj.samples[i].truck.tractor.acceleration.ay = tay[i];
    }
  }
  return traj;
}

inline Trajectory load_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open trajectory file '" + path + "'");
  return parse_trajectory(in);
}

/// Tractor yaw rate from steering and rear-axle speed. The car's stays zero;
/// no measure uses it.
inline void attach_yaw_rates(Trajectory& traj, const ArticulatedGeometry& g) {
  for (auto& s : traj.samples) {
    s.truck.tractor.acceleration.yaw_rate = tractor_yaw_rate(s.truck.ub0, s.truck.delta, g.wheelbase);
  }
}

}  // namespace ttc2d

#endif  // TTC2D_SCENARIO_HPP_
