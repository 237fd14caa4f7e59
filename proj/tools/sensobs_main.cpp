// sensobs: sensor observability and kinematic singularity analysis for
// serial manipulators.
//
// Subcommands:
//   analyze       observability vector, index, ellipsoid and axis flags
//   classify      kinematic / observability / J^T-null-space classification
//   special-case  observability matrix vs. Jacobian column comparison
//   sweep         index time series over a joint-space trajectory (CSV)
//   presets       list bundled robots/suites/scenarios, write them to disk
//
// --robot/--sensors/--scenario accept a bundled preset name or a file path.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sensobs/errors.hpp"
#include "sensobs/io.hpp"
#include "sensobs/kinematics.hpp"
#include "sensobs/observability.hpp"
#include "sensobs/presets.hpp"
#include "sensobs/singularity.hpp"
#include "sensobs/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sensobs;

const char* kAxisLabels[6] = {"fx", "fy", "fz", "taux", "tauy", "tauz"};

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

bool IsPresetName(const std::vector<std::string>& names, const std::string& s) {
  return std::find(names.begin(), names.end(), s) != names.end();
}

KinematicChain ResolveRobot(const std::string& spec) {
  if (IsPresetName(presets::RobotNames(), spec)) return presets::Robot(spec);
  return LoadRobot(spec);
}

SensorSuite ResolveSuite(const std::string& spec) {
  if (IsPresetName(presets::SuiteNames(), spec)) return presets::Suite(spec);
  return LoadSuite(spec);
}

Scenario ResolveScenario(const std::string& spec) {
  if (IsPresetName(presets::ScenarioNames(), spec)) {
    const presets::ScenarioPreset preset = presets::Scenario(spec);
    return Scenario{presets::Robot(preset.robot), presets::Suite(preset.suite),
                    preset.trajectory};
  }
  return LoadScenario(spec);
}

Eigen::VectorXd ParseConfig(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stod(item, &pos));
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--q: '" + item + "' is not a number");
    }
  }
  if (values.empty()) throw ConfigError("--q: no joint values given");
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file " + out_path);
  out << text;
}

json VectorToJson(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

struct CommonArgs {
  std::string robot, sensors, scenario, q_text, out_path;
  std::string gamma = "sum";
  std::string format = "text";
  double threshold = 0.0;
  double sample_rate = 0.0;  // 0 = scenario value
  double wk_scale = 0.0;     // 0 = no display scaling
};

GammaKind GammaFromName(const std::string& name) {
  if (name == "sum") return GammaKind::kSum;
  if (name == "max") return GammaKind::kMax;
  throw ConfigError("--gamma must be 'sum' or 'max'");
}

int RunAnalyze(const CommonArgs& args) {
  const KinematicChain chain = ResolveRobot(args.robot);
  const SensorSuite suite = ResolveSuite(args.sensors);
  const Eigen::VectorXd q = ParseConfig(args.q_text);
  const ObservabilityResult result =
      Analyze(chain, q, suite, GammaFromName(args.gamma), args.threshold);

  std::ostringstream out;
  if (args.format == "json") {
    json flags = json::array();
    for (bool f : result.per_axis_flags) flags.push_back(f);
    const json doc{{"robot", chain.name()},
                   {"suite", suite.name},
                   {"q", VectorToJson(q)},
                   {"gamma", args.gamma},
                   {"threshold", args.threshold},
                   {"s", VectorToJson(result.s)},
                   {"o", result.o},
                   {"ellipsoid_force", VectorToJson(result.ellipsoid_force)},
                   {"ellipsoid_torque", VectorToJson(result.ellipsoid_torque)},
                   {"per_axis_flags", flags}};
    out << doc.dump(2) << "\n";
  } else if (args.format == "csv") {
    for (int j = 0; j < 6; ++j) out << "s_" << kAxisLabels[j] << ",";
    out << "o";
    for (int j = 0; j < 6; ++j) out << ",flag_" << kAxisLabels[j];
    out << "\n";
    for (int j = 0; j < 6; ++j) out << Fmt(result.s[j]) << ",";
    out << Fmt(result.o);
    for (int j = 0; j < 6; ++j) out << "," << (result.per_axis_flags[j] ? 1 : 0);
    out << "\n";
  } else {
    out << "robot: " << chain.name() << "  (n_q=" << chain.dof() << ")\n";
    out << "suite: " << suite.name << "  (n_s=" << suite.size() << ")\n";
    out << "q:";
    for (Eigen::Index i = 0; i < q.size(); ++i) out << " " << Fmt(q[i]);
    out << "\n";
    out << "gamma: " << args.gamma << "\n";
    out << "s:";
    for (int j = 0; j < 6; ++j)
      out << "  " << kAxisLabels[j] << "=" << Fmt(result.s[j]);
    out << "\n";
    out << "o: " << Fmt(result.o) << "\n";
    out << "force ellipsoid semi-axes:  " << Fmt(result.ellipsoid_force.x())
        << " " << Fmt(result.ellipsoid_force.y()) << " "
        << Fmt(result.ellipsoid_force.z()) << "\n";
    out << "torque ellipsoid semi-axes: " << Fmt(result.ellipsoid_torque.x())
        << " " << Fmt(result.ellipsoid_torque.y()) << " "
        << Fmt(result.ellipsoid_torque.z()) << "\n";
    out << "flagged axes (threshold=" << Fmt(args.threshold) << "):";
    bool any = false;
    for (int j = 0; j < 6; ++j) {
      if (result.per_axis_flags[j]) {
        out << " " << kAxisLabels[j];
        any = true;
      }
    }
    out << (any ? "\n" : " none\n");
  }
  Emit(out.str(), args.out_path);
  return 0;
}

int RunClassify(const CommonArgs& args) {
  const KinematicChain chain = ResolveRobot(args.robot);
  const SensorSuite suite = ResolveSuite(args.sensors);
  const Eigen::VectorXd q = ParseConfig(args.q_text);
  ClassifyTolerances tol;
  tol.observability = args.threshold;
  const ConfigClassification c =
      Classify(chain, q, suite, GammaFromName(args.gamma), tol);

  std::ostringstream out;
  if (args.format == "json") {
    const json doc{{"robot", chain.name()},
                   {"suite", suite.name},
                   {"q", VectorToJson(q)},
                   {"gamma", args.gamma},
                   {"w_k", c.w_k},
                   {"o_sum", c.o_sum},
                   {"o_max", c.o_max},
                   {"kinematic_singular", c.kinematic_singular},
                   {"observability_singular", c.observability_singular},
                   {"jt_nullspace_dim", c.jt_nullspace_dim},
                   {"false_observability_singularity", c.false_observability_singularity}};
    out << doc.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "w_k,o_sum,o_max,kinematic_singular,observability_singular,"
           "jt_nullspace_dim,false_observability_singularity\n";
    out << Fmt(c.w_k) << "," << Fmt(c.o_sum) << "," << Fmt(c.o_max) << ","
        << c.kinematic_singular << "," << c.observability_singular << ","
        << c.jt_nullspace_dim << "," << c.false_observability_singularity << "\n";
  } else {
    out << "robot: " << chain.name() << "   suite: " << suite.name
        << "   gamma: " << args.gamma << "\n";
    out << "w_k: " << Fmt(c.w_k) << "\n";
    out << "o_sum: " << Fmt(c.o_sum) << "\n";
    out << "o_max: " << Fmt(c.o_max) << "\n";
    out << "kinematic_singular: " << (c.kinematic_singular ? "true" : "false") << "\n";
    out << "observability_singular: " << (c.observability_singular ? "true" : "false") << "\n";
    out << "jt_nullspace_dim: " << c.jt_nullspace_dim << "\n";
    out << "false_observability_singularity: "
        << (c.false_observability_singularity ? "true" : "false") << "\n";
  }
  Emit(out.str(), args.out_path);
  return 0;
}

int RunSpecialCase(const CommonArgs& args) {
  const KinematicChain chain = ResolveRobot(args.robot);
  const Eigen::VectorXd q = ParseConfig(args.q_text);
  const SpecialCaseReport report = SpecialCaseCheck(chain, q);

  std::ostringstream out;
  if (args.format == "json") {
    json cols = json::array();
    for (std::size_t k = 0; k < report.columns.size(); ++k) {
      const SpecialCaseColumn& col = report.columns[k];
      cols.push_back({{"joint", k + 1},
                      {"excluded", col.excluded},
                      {"translational_deviation", col.translational_deviation},
                      {"rotational_deviation", col.rotational_deviation}});
    }
    const json doc{{"robot", chain.name()},
                   {"q", VectorToJson(q)},
                   {"columns", cols},
                   {"max_deviation", report.max_deviation},
                   {"excluded_count", report.excluded_count}};
    out << doc.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "joint,excluded,translational_deviation,rotational_deviation\n";
    for (std::size_t k = 0; k < report.columns.size(); ++k) {
      const SpecialCaseColumn& col = report.columns[k];
      out << (k + 1) << "," << col.excluded << ","
          << Fmt(col.translational_deviation) << ","
          << Fmt(col.rotational_deviation) << "\n";
    }
  } else {
    out << "robot: " << chain.name() << "\n";
    for (std::size_t k = 0; k < report.columns.size(); ++k) {
      const SpecialCaseColumn& col = report.columns[k];
      out << "joint " << (k + 1) << ": ";
      if (col.excluded) {
        out << "excluded (moment arm collinear with sensor axis)\n";
      } else {
        out << "dev_p=" << Fmt(col.translational_deviation)
            << " dev_rot=" << Fmt(col.rotational_deviation) << "\n";
      }
    }
    out << "max deviation: " << Fmt(report.max_deviation) << "\n";
    out << "excluded columns: " << report.excluded_count << "\n";
  }
  Emit(out.str(), args.out_path);
  return 0;
}

int RunSweep(const CommonArgs& args) {
  Scenario scenario = ResolveScenario(args.scenario);
  if (args.sample_rate > 0.0) scenario.trajectory.sample_rate = args.sample_rate;
  SweepSeries series = Sweep(scenario.chain, scenario.suite, scenario.trajectory);

  // Display-only scaling of the normalized manipulability column: maps
  // [0,1] onto [0,1] with slope k/(1-exp(-k)) at zero, magnifying the
  // near-singular region. Off by default so data files stay scale-free.
  if (args.wk_scale > 0.0) {
    const double k = args.wk_scale;
    for (double& v : series.wk_norm) {
      v = (1.0 - std::exp(-k * v)) / (1.0 - std::exp(-k));
    }
  }

  std::ostringstream out;
  WriteSweepCsv(series, out);
  Emit(out.str(), args.out_path);
  return 0;
}

int RunPresets(const CommonArgs& args) {
  std::ostringstream out;
  if (!args.out_path.empty()) {
    for (const std::string& path : presets::WritePresetFiles(args.out_path)) {
      out << path << "\n";
    }
  } else {
    out << "robots:\n";
    for (const std::string& name : presets::RobotNames()) out << "  " << name << "\n";
    out << "suites:\n";
    for (const std::string& name : presets::SuiteNames()) out << "  " << name << "\n";
    out << "scenarios:\n";
    for (const std::string& name : presets::ScenarioNames()) out << "  " << name << "\n";
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sensor observability analysis for serial manipulators"};
  app.require_subcommand(1);

  CommonArgs args;
  const auto add_io = [&](CLI::App* cmd, bool needs_suite, bool needs_q) {
    cmd->add_option("--robot", args.robot, "robot preset name or description file")
        ->required();
    if (needs_suite) {
      cmd->add_option("--sensors", args.sensors, "suite preset name or description file")
          ->required();
    }
    if (needs_q) {
      cmd->add_option("--q", args.q_text, "joint values, comma separated")->required();
    }
    cmd->add_option("--format", args.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", args.out_path, "output file (default stdout)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "observability of one configuration");
  add_io(analyze, true, true);
  analyze->add_option("--gamma", args.gamma, "sum|max")
      ->check(CLI::IsMember({"sum", "max"}));
  analyze->add_option("--threshold", args.threshold, "axis flag threshold (default 0)");

  CLI::App* classify = app.add_subcommand("classify", "singularity classification");
  add_io(classify, true, true);
  classify->add_option("--gamma", args.gamma, "sum|max")
      ->check(CLI::IsMember({"sum", "max"}));
  classify->add_option("--threshold", args.threshold,
                       "observability-singularity tolerance on o (default 0)");

  CLI::App* special = app.add_subcommand(
      "special-case", "observability matrix vs Jacobian for joint-torque sensing");
  add_io(special, false, true);

  CLI::App* sweep = app.add_subcommand("sweep", "trajectory sweep, CSV output");
  sweep->add_option("--scenario", args.scenario, "scenario preset name or file")
      ->required();
  sweep->add_option("--sample-rate", args.sample_rate, "override scenario rate [Hz]");
  sweep->add_option("--wk-scale", args.wk_scale,
                    "exponential display scaling of wk_norm (0 = off)");
  sweep->add_option("--out", args.out_path, "output file (default stdout)");

  CLI::App* list = app.add_subcommand("presets", "list bundled models");
  list->add_option("--out", args.out_path, "write preset files into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return RunAnalyze(args);
    if (app.got_subcommand(classify)) return RunClassify(args);
    if (app.got_subcommand(special)) return RunSpecialCase(args);
    if (app.got_subcommand(sweep)) return RunSweep(args);
    if (app.got_subcommand(list)) return RunPresets(args);
  } catch (const UnsupportedChainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
