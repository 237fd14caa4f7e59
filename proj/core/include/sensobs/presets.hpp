#ifndef SENSOBS_PRESETS_HPP_
#define SENSOBS_PRESETS_HPP_

#include <string>
#include <vector>

#include "sensobs/chain.hpp"
#include "sensobs/sensors.hpp"
#include "sensobs/sweep.hpp"

namespace sensobs::presets {

// Bundled models. Robots: a planar 2R and 3R arm, and "baxter-like-7dof",
// a 7-DOF arm with alternating twist axes and lateral shoulder/elbow
// offsets like the Rethink Baxter (dimensions are round numbers, not the
// vendor values). Suites: a canonical joint-torque suite per robot plus a
// six-axis end-effector force-torque suite for the 7-DOF arm.

std::vector<std::string> RobotNames();
KinematicChain Robot(const std::string& name);

std::vector<std::string> SuiteNames();
SensorSuite Suite(const std::string& name);

struct ScenarioPreset {
  std::string name;
  std::string robot;
  std::string suite;
  Trajectory trajectory;
};

std::vector<std::string> ScenarioNames();
ScenarioPreset Scenario(const std::string& name);

// Named configurations of the baxter-like arm. Each is pinned to an exact
// geometric property that the test suite re-verifies.

/// Arm stretched horizontally with the shoulder/elbow offsets folded so
/// every pitch-joint origin sits exactly at end-effector height: x-forces
/// are unobservable by joint torque sensing and x-translation is lost
/// kinematically.
Eigen::VectorXd HorizontalReachPose();

/// Arm straight up: every joint axis is orthogonal to the world x axis, so
/// x-torques are unobservable; the x rotation row of the Jacobian is zero
/// as well.
Eigen::VectorXd VerticalReachPose();

/// Upper arm tilted so that the wrist roll axis is collinear with the base
/// axis (and with the straight wrist, the forearm roll too): kinematically
/// singular while every task axis stays observed.
Eigen::VectorXd WristOverBasePose();

/// HorizontalReachPose with the wrist pitched down: an x-force at the end
/// effector balances against a y-torque to produce zero joint readings
/// (J^T has a null direction) although no task axis is unobserved.
Eigen::VectorXd TiltedReachPose();

/// Writes every bundled robot, suite and scenario into `dir` as
/// <name>.robot.json / <name>.sensors.json / <name>.scenario.json and
/// returns the written paths.
std::vector<std::string> WritePresetFiles(const std::string& dir);

}  // namespace sensobs::presets

#endif  // SENSOBS_PRESETS_HPP_
