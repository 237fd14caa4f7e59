#ifndef SENSOBS_IO_HPP_
#define SENSOBS_IO_HPP_

#include <string>

#include "sensobs/chain.hpp"
#include "sensobs/sensors.hpp"
#include "sensobs/sweep.hpp"

namespace sensobs {

// Robot description (JSON):
//   {name, base_frame: {rpy, xyz}, ee_offset: {rpy, xyz},
//    joints: [{name, kind, a, alpha, d, theta_offset}]}
// Angles in radians, lengths in meters, kind is "revolute" or "prismatic".
//
// Sensor suite (JSON):
//   {sensors: [{name, parent_joint, offset: {rpy, xyz}, axis: [6 floats],
//               transform: "force"|"identity"}]}
// parent_joint is 1-based; a multi-axis device is entered as one sensor
// entry per measured axis.
//
// Scenario (JSON):
//   {robot: <path>, sensors: <path>, waypoints: [{t, q: [...]}], sample_rate}
// Relative robot/sensors paths resolve against the scenario file's directory.
//
// Loaders throw ParseError with file, line and field context.

KinematicChain ParseRobot(const std::string& text, const std::string& label);
KinematicChain LoadRobot(const std::string& path);

SensorSuite ParseSuite(const std::string& text, const std::string& label);
SensorSuite LoadSuite(const std::string& path);

struct Scenario {
  KinematicChain chain;
  SensorSuite suite;
  Trajectory trajectory;
};

Scenario LoadScenario(const std::string& path);

std::string RobotToJson(const KinematicChain& chain);
std::string SuiteToJson(const SensorSuite& suite);
std::string ScenarioToJson(const Trajectory& trajectory,
                           const std::string& robot_path,
                           const std::string& sensors_path);

}  // namespace sensobs

#endif  // SENSOBS_IO_HPP_
