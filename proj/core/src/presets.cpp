#include "sensobs/presets.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "sensobs/errors.hpp"
#include "sensobs/io.hpp"

namespace sensobs::presets {
namespace {

constexpr double kPi = 3.14159265358979323846;

KinematicChain Planar2R() {
  return KinematicChain(
      "planar-2r",
      {{JointKind::kRevolute, 1.0, 0.0, 0.0, 0.0, "j1"},
       {JointKind::kRevolute, 1.0, 0.0, 0.0, 0.0, "j2"}});
}

KinematicChain Planar3R() {
  return KinematicChain(
      "planar-3r",
      {{JointKind::kRevolute, 1.0, 0.0, 0.0, 0.0, "j1"},
       {JointKind::kRevolute, 0.75, 0.0, 0.0, 0.0, "j2"},
       {JointKind::kRevolute, 0.5, 0.0, 0.0, 0.0, "j3"}});
}

// Shoulder/elbow lateral offsets of 0.069 m; the wrist is in line with the
// forearm so that a straight wrist keeps the forearm and wrist roll axes on
// one line.
KinematicChain BaxterLike() {
  return KinematicChain(
      "baxter-like-7dof",
      {{JointKind::kRevolute, 0.069, -kPi / 2, 0.27, 0.0, "s0"},
       {JointKind::kRevolute, 0.0, kPi / 2, 0.0, kPi / 2, "s1"},
       {JointKind::kRevolute, 0.069, -kPi / 2, 0.36, 0.0, "e0"},
       {JointKind::kRevolute, 0.0, kPi / 2, 0.0, 0.0, "e1"},
       {JointKind::kRevolute, 0.0, -kPi / 2, 0.37, 0.0, "w0"},
       {JointKind::kRevolute, 0.0, kPi / 2, 0.0, 0.0, "w1"},
       {JointKind::kRevolute, 0.0, 0.0, 0.23, 0.0, "w2"}});
}

Eigen::VectorXd Pose7(double q1, double q2, double q3, double q4, double q5,
                      double q6, double q7) {
  Eigen::VectorXd q(7);
  q << q1, q2, q3, q4, q5, q6, q7;
  return q;
}

}  // namespace

std::vector<std::string> RobotNames() {
  return {"planar-2r", "planar-3r", "baxter-like-7dof"};
}

KinematicChain Robot(const std::string& name) {
  if (name == "planar-2r") return Planar2R();
  if (name == "planar-3r") return Planar3R();
  if (name == "baxter-like-7dof") return BaxterLike();
  throw ConfigError("unknown preset robot '" + name + "'");
}

std::vector<std::string> SuiteNames() {
  return {"planar-2r-torque", "planar-3r-torque", "baxter-like-7dof-torque",
          "baxter-like-7dof-ee-ft"};
}

SensorSuite Suite(const std::string& name) {
  if (name == "planar-2r-torque") return CanonicalTorqueSuite(Planar2R());
  if (name == "planar-3r-torque") return CanonicalTorqueSuite(Planar3R());
  if (name == "baxter-like-7dof-torque") return CanonicalTorqueSuite(BaxterLike());
  if (name == "baxter-like-7dof-ee-ft") return EndEffectorSixAxisSuite(BaxterLike());
  throw ConfigError("unknown preset suite '" + name + "'");
}

std::vector<std::string> ScenarioNames() { return {"baxter-like-7dof-sweep"}; }

ScenarioPreset Scenario(const std::string& name) {
  if (name != "baxter-like-7dof-sweep") {
    throw ConfigError("unknown preset scenario '" + name + "'");
  }
  // Arbitrary pose -> horizontal reach (observability and kinematic
  // singularity) -> all but the base joint zeroed -> arbitrary pose, with
  // the last wrist joint held at zero throughout.
  ScenarioPreset preset;
  preset.name = name;
  preset.robot = "baxter-like-7dof";
  preset.suite = "baxter-like-7dof-torque";
  preset.trajectory.sample_rate = 100.0;
  preset.trajectory.waypoints = {
      {0.0, Pose7(0.4, -0.9, 0.25, 1.1, -0.5, 0.6, 0.0)},
      {4.0, HorizontalReachPose()},
      {8.0, Pose7(0.9, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)},
      {12.0, Pose7(-0.5, -0.4, 0.7, 0.9, 0.3, -0.8, 0.0)},
  };
  return preset;
}

Eigen::VectorXd HorizontalReachPose() {
  // q2/q4 solved so the elbow, wrist and end effector all sit at shoulder
  // height (the test suite re-verifies this to ~1e-15).
  return Pose7(0.0, -0.18937004997584472, 0.0, 0.18937004997584461, 0.0, 0.0,
               0.0);
}

Eigen::VectorXd VerticalReachPose() {
  return Pose7(0.0, -kPi / 2, 0.0, 0.0, 0.0, 0.0, 0.0);
}

Eigen::VectorXd WristOverBasePose() {
  // q2/q4 solved so the forearm is vertical with the wrist directly over
  // the base: the base, forearm and wrist roll axes share one line.
  return Pose7(0.0, -1.9495364267465858, 0.0, 0.37874009995168922, 0.0, 0.0,
               0.0);
}

Eigen::VectorXd TiltedReachPose() {
  Eigen::VectorXd q = HorizontalReachPose();
  q[5] -= 0.35;
  return q;
}

std::vector<std::string> WritePresetFiles(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  std::vector<std::string> written;
  const auto emit = [&](const std::string& filename, const std::string& text) {
    const fs::path path = fs::path(dir) / filename;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw ConfigError("cannot write preset file " + path.string());
    }
    out << text;
    written.push_back(path.string());
  };

  for (const std::string& name : RobotNames()) {
    emit(name + ".robot.json", RobotToJson(Robot(name)));
  }
  for (const std::string& name : SuiteNames()) {
    emit(name + ".sensors.json", SuiteToJson(Suite(name)));
  }
  for (const std::string& name : ScenarioNames()) {
    const ScenarioPreset preset = Scenario(name);
    emit(name + ".scenario.json",
         ScenarioToJson(preset.trajectory, preset.robot + ".robot.json",
                        preset.suite + ".sensors.json"));
  }
  return written;
}

}  // namespace sensobs::presets
