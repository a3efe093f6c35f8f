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

// Command-line front end: simulate, compute, validate.
//
// Exit codes: 0 ok, 2 I/O, configuration or usage, 3 measure not applicable
// to the trajectory, 4 validation tolerance breached. Every flag can also be
// set through a TTC2D_ environment variable; the flag wins.

#ifndef TTC2D_CLI_HPP_
#define TTC2D_CLI_HPP_

#include <algorithm>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ios>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttc2d/articulated.hpp"
#include "ttc2d/measures.hpp"
#include "ttc2d/outcome.hpp"
#include "ttc2d/scenario.hpp"
#include "ttc2d/validation.hpp"

namespace ttc2d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPairing = 3;
inline constexpr int kExitValidation = 4;

/// Samples below this TTC are counted in the perception summary.
inline constexpr double kPerceptionThreshold = 1.5;

enum class Measure { kConv, kGuo2d, kV1, kV2, kV3 };

inline std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::kConv:
      return "CONV";
    case Measure::kGuo2d:
      return "GUO2D";
    case Measure::kV1:
      return "V1";
    case Measure::kV2:
      return "V2";
    case Measure::kV3:
      break;
  }
  return "V3";
}

/// Comma-separated, case-insensitive; duplicates collapse, order is kept.
inline std::vector<Measure> parse_measures(const std::string& text) {
  std::vector<Measure> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    std::transform(item.begin(), item.end(), item.begin(), [](unsigned char c) { return std::toupper(c); });
    Measure m;
    if (item == "CONV") {
      m = Measure::kConv;
    } else if (item == "GUO2D") {
      m = Measure::kGuo2d;
    } else if (item == "V1") {
      m = Measure::kV1;
    } else if (item == "V2") {
      m = Measure::kV2;
    } else if (item == "V3") {
      m = Measure::kV3;
    } else {
      throw std::invalid_argument("unknown measure '" + item + "' (expected CONV, GUO2D, V1, V2, V3)");
    }
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw std::invalid_argument("no measures selected");
  return out;
}

/// `inf` for no collision, otherwise 6 significant digits (17 with `full`).
inline std::string format_number(double v, bool full) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(full ? 17 : 6) << v;
  return os.str();
}

inline TtcOutcome evaluate(Measure m, const TrajectorySample& s, const RigidVehicle& car,
                           const ArticulatedGeometry& g, const SolverConfig& cfg) {
  switch (m) {
    case Measure::kConv:
      return ttc_conventional_articulated(s.truck, car, g);
    case Measure::kGuo2d:
      return ttc2d_baseline_articulated(s.truck, car, g);
    case Measure::kV2:
      return ttc2d_v2(s.truck, car, g, cfg);
    case Measure::kV3:
      return ttc2d_v3(s.truck, car, g, cfg);
    case Measure::kV1:
      break;
  }
  throw std::invalid_argument("V1 is defined for rigid pairs only");
}

struct SimulateOptions {
  std::string scenario;
  std::string out;
  std::optional<double> dt;
  std::optional<double> duration;
  std::string report;
  std::string distances;
};

struct ComputeOptions {
  std::string trajectory;
  std::string measures = "CONV,GUO2D,V2,V3";
  std::string out;
  std::optional<double> truncate;
  std::string scenario;  // geometry source; built-in defaults otherwise
  bool full_precision = false;
};

namespace detail {

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot write '" + path + "'");
  return f;
}

inline std::string contact_line(const std::optional<ContactEvent>& ev) {
  if (!ev) return "first_contact none";
  std::ostringstream os;
  os << "first_contact t=" << format_number(ev->t, false)
     << " type=" << (ev->direction == Direction::kLateral ? "SIDESWIPE" : "REAR_END") << " unit=" << to_string(ev->unit);
  return os.str();
}

}  // namespace detail

inline int run_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    CutInConfig cfg = load_cutin_config(opt.scenario);
    if (opt.dt) cfg.dt = *opt.dt;
    if (opt.duration) cfg.duration = *opt.duration;
    cfg.validate();
    const Trajectory traj = generate_cutin(cfg);
    {
      auto f = detail::open_out(opt.out);
      write_trajectory(f, traj);
      if (!f) throw std::ios_base::failure("write failed for '" + opt.out + "'");
    }
    const std::string report = detail::contact_line(first_contact(traj, cfg.truck_geometry, cfg.car_geometry));
    out << report << '\n';
    if (!opt.report.empty()) detail::open_out(opt.report) << report << '\n';
    if (!opt.distances.empty()) {
      auto f = detail::open_out(opt.distances);
      f << "t,tractor_lon,tractor_lat,semitrailer_lon,semitrailer_lat\n";
      for (const auto& d : distance_series(traj, cfg.truck_geometry, cfg.car_geometry)) {
        f << format_number(d.t, false) << ',' << format_number(d.tractor.lon, false) << ','
          << format_number(d.tractor.lat, false) << ',' << format_number(d.semitrailer.lon, false) << ','
          << format_number(d.semitrailer.lat, false) << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "simulate: " << e.what() << '\n';
    return kExitConfig;
  }
}

inline int run_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<Measure> measures;
  try {
    measures = parse_measures(opt.measures);
  } catch (const std::exception& e) {
    err << "compute: " << e.what() << '\n';
    return kExitConfig;
  }
  if (std::find(measures.begin(), measures.end(), Measure::kV1) != measures.end()) {
    err << "compute: V1 applies to rigid vehicle pairs; the trajectory has an articulated lead\n";
    return kExitPairing;
  }
  if (opt.truncate && !(*opt.truncate > 0.0)) {
    err << "compute: --truncate must be positive\n";
    return kExitConfig;
  }
  try {
    const CutInConfig geom_src = opt.scenario.empty() ? default_cutin_config() : load_cutin_config(opt.scenario);
    const ArticulatedGeometry& g = geom_src.truck_geometry;
    Trajectory traj = load_trajectory(opt.trajectory);
    attach_yaw_rates(traj, g);

    auto f = detail::open_out(opt.out);
    f << "t,measure,ttc,direction,unit\n";
    std::vector<std::size_t> below(measures.size(), 0);
    const SolverConfig cfg;
    RigidVehicle car;
    car.geometry = geom_src.car_geometry;
    for (const auto& s : traj.samples) {
      car.state = s.car;
      for (std::size_t i = 0; i < measures.size(); ++i) {
        const TtcOutcome o = evaluate(measures[i], s, car, g, cfg);
        double shown = o.time;
        if (opt.truncate && o.collides()) shown = std::min(shown, *opt.truncate);
        const std::string text = o.valid ? format_number(shown, opt.full_precision) : "nan";
        if (o.valid && std::stod(text) < kPerceptionThreshold) ++below[i];
        f << format_number(s.t, opt.full_precision) << ',' << to_string(measures[i]) << ',' << text << ','
          << (o.valid ? to_string(o.direction) : "invalid") << ',' << to_string(o.unit) << '\n';
      }
    }
    if (!f) throw std::ios_base::failure("write failed for '" + opt.out + "'");
    for (std::size_t i = 0; i < measures.size(); ++i) {
      out << "below_" << kPerceptionThreshold << "s " << to_string(measures[i]) << ' ' << below[i] << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "compute: " << e.what() << '\n';
    return kExitConfig;
  }
}

inline void print_report(std::ostream& os, const ValidationReport& r) {
  os << "version " << to_string(r.version) << '\n'
     << "trials " << r.trials << '\n'
     << "grazing " << r.grazing << '\n'
     << "compared " << r.compared << '\n'
     << "agreement_rate " << format_number(r.agreement_rate(), false) << '\n'
     << "both_finite " << r.both_finite << '\n'
     << "max_abs_dev " << format_number(r.max_abs_dev, false) << '\n'
     << "mean_abs_dev " << format_number(r.mean_abs_dev, false) << '\n'
     << "tolerance " << format_number(r.tolerance, false) << '\n'
     << "verdict " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

inline int run_validate(const ValidationOptions& opt, std::ostream& out, std::ostream& err) {
  ValidationReport rep;
  try {
    rep = validate_measure(opt);
  } catch (const std::exception& e) {
    err << "validate: " << e.what() << '\n';
    return kExitConfig;
  }
  print_report(out, rep);
  if (rep.passed()) return kExitOk;
  if (rep.worst_index) {
    err << "worst trial " << *rep.worst_index << " (seed " << opt.seed << "): measure "
        << format_number(rep.worst.measure.time, true) << ", oracle " << format_number(rep.worst.oracle.time, true)
        << '\n'
        << rep.worst_config;
  }
  return kExitValidation;
}

/// Parses argv and dispatches. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-to-collision measures for rigid and articulated vehicles"};
  app.require_subcommand(1);

  SimulateOptions sim;
  double sim_dt = 0.0;
  double sim_duration = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run the cut-in scenario and write its trajectory");
  simulate->add_option("--scenario", sim.scenario, "Scenario INI file")->required()->envname("TTC2D_SCENARIO");
  simulate->add_option("--out", sim.out, "Trajectory CSV to write")->required()->envname("TTC2D_OUT");
  auto* sim_dt_opt = simulate->add_option("--dt", sim_dt, "Simulation step (s)")->envname("TTC2D_DT");
  auto* sim_dur_opt = simulate->add_option("--duration", sim_duration, "Simulated time (s)")->envname("TTC2D_DURATION");
  simulate->add_option("--report", sim.report, "Also write the contact report here")->envname("TTC2D_REPORT");
  simulate->add_option("--distances", sim.distances, "Write per-unit distance series CSV")
      ->envname("TTC2D_DISTANCES");

  ComputeOptions comp;
  std::string precision = "6";
  std::string truncate_text;
  auto* compute = app.add_subcommand("compute", "Evaluate TTC measures along a trajectory");
  compute->add_option("--trajectory", comp.trajectory, "Trajectory CSV")->required()->envname("TTC2D_TRAJECTORY");
  compute->add_option("--measures", comp.measures, "Comma list of CONV,GUO2D,V1,V2,V3")
      ->capture_default_str()
      ->envname("TTC2D_MEASURES");
  compute->add_option("--out", comp.out, "Output CSV")->required()->envname("TTC2D_OUT");
  auto* trunc_opt = compute->add_option("--truncate", truncate_text, "Clamp emitted finite TTC (5 s when no value)")
                        ->expected(0, 1)
                        ->envname("TTC2D_TRUNCATE");
  compute->add_option("--scenario", comp.scenario, "Scenario INI supplying vehicle geometry")
      ->envname("TTC2D_SCENARIO");
  compute->add_option("--precision", precision, "6 or full")
      ->check(CLI::IsMember({"6", "full"}))
      ->capture_default_str()
      ->envname("TTC2D_PRECISION");

  ValidationOptions val;
  std::string version = "v1";
  auto* validate = app.add_subcommand("validate", "Compare a measure against the brute-force oracle");
  validate->add_option("--version", version, "v1, v2, v3 or guo")
      ->check(CLI::IsMember({"v1", "v2", "v3", "guo"}))
      ->capture_default_str()
      ->envname("TTC2D_VERSION");
  validate->add_option("--trials", val.trials, "Random configurations")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}))
      ->capture_default_str()
      ->envname("TTC2D_TRIALS");
  validate->add_option("--seed", val.seed, "Base seed")->capture_default_str()->envname("TTC2D_SEED");
  validate->add_option("--dt", val.dt, "Measure step (s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str()
      ->envname("TTC2D_DT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  // CLI11 drops environment values that fail validation; treat them as errors.
  for (const CLI::App* sub : app.get_subcommands()) {
    for (const CLI::Option* opt : sub->get_options()) {
      const std::string& name = opt->get_envname();
      if (name.empty() || opt->count() > 0) continue;
      const char* value = std::getenv(name.c_str());
      if (value != nullptr && *value != '\0') {
        err << name << ": invalid value '" << value << "' for " << opt->get_name() << '\n';
        return kExitConfig;
      }
    }
  }

  if (simulate->parsed()) {
    if (sim_dt_opt->count() > 0) sim.dt = sim_dt;
    if (sim_dur_opt->count() > 0) sim.duration = sim_duration;
    return run_simulate(sim, out, err);
  }
  if (compute->parsed()) {
    if (trunc_opt->count() > 0) {
      try {
        comp.truncate = truncate_text.empty() ? 5.0 : ttc2d::detail::parse_double(truncate_text, "--truncate");
      } catch (const std::exception& e) {
        err << "compute: " << e.what() << '\n';
        return kExitConfig;
      }
    }
    comp.full_precision = precision == "full";
    return run_compute(comp, out, err);
  }
  val.version = *parse_version(version);
  val.oracle_dt = std::min(val.oracle_dt, val.dt / 4.0);
  return run_validate(val, out, err);
}

}  // namespace ttc2d::cli

#endif  // TTC2D_CLI_HPP_
