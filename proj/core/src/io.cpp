#include "sensobs/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sensobs/errors.hpp"

namespace sensobs {
namespace {

using json = nlohmann::ordered_json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ParseJson(const std::string& text, const std::string& label) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "[json.exception...] parse error at line L, column C: ..."
    std::string what = e.what();
    if (const auto bracket = what.find("] "); bracket != std::string::npos) {
      what = what.substr(bracket + 2);
    }
    throw ParseError(label + ": " + what);
  }
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return *it;
}

double Number(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number()) {
    throw ParseError(where + ": field '" + key + "' must be a number");
  }
  return v.get<double>();
}

Eigen::Vector3d Vec3(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) {
    throw ParseError(where + ": expected an array of 3 numbers");
  }
  Eigen::Vector3d out;
  for (int i = 0; i < 3; ++i) out[i] = v[i].get<double>();
  return out;
}

RigidTransform Transform(const json& obj, const char* key,
                         const std::string& where) {
  const json& t = Field(obj, key, where);
  const std::string ctx = where + "." + key;
  return RigidTransform::FromRpyXyz(Vec3(Field(t, "rpy", ctx), ctx + ".rpy"),
                                    Vec3(Field(t, "xyz", ctx), ctx + ".xyz"));
}

json TransformToJson(const RigidTransform& t) {
  const Eigen::Vector3d rpy = RotationToRpy(t.rotation);
  return json{{"rpy", {rpy.x(), rpy.y(), rpy.z()}},
              {"xyz", {t.translation.x(), t.translation.y(), t.translation.z()}}};
}

}  // namespace

KinematicChain ParseRobot(const std::string& text, const std::string& label) try {
  const json doc = ParseJson(text, label);

  std::vector<JointSpec> joints;
  const json& joint_list = Field(doc, "joints", label);
  if (!joint_list.is_array() || joint_list.empty()) {
    throw ParseError(label + ": 'joints' must be a non-empty array");
  }
  for (std::size_t i = 0; i < joint_list.size(); ++i) {
    const std::string where = label + ".joints[" + std::to_string(i) + "]";
    const json& item = joint_list[i];
    JointSpec j;
    j.name = Field(item, "name", where).get<std::string>();
    const std::string kind = Field(item, "kind", where).get<std::string>();
    if (kind == "revolute") {
      j.kind = JointKind::kRevolute;
    } else if (kind == "prismatic") {
      j.kind = JointKind::kPrismatic;
    } else {
      throw ParseError(where + ": kind '" + kind +
                       "' is neither 'revolute' nor 'prismatic'");
    }
    j.a = Number(item, "a", where);
    j.alpha = Number(item, "alpha", where);
    j.d = Number(item, "d", where);
    j.theta_offset = Number(item, "theta_offset", where);
    joints.push_back(j);
  }

  try {
    return KinematicChain(Field(doc, "name", label).get<std::string>(),
                          std::move(joints), Transform(doc, "base_frame", label),
                          Transform(doc, "ee_offset", label));
  } catch (const ConfigError& e) {
    throw ParseError(label + ": " + e.what());
  }
} catch (const json::exception& e) {
  // wrong value types surface here (e.g. a string where a number belongs)
  throw ParseError(label + ": " + e.what());
}

KinematicChain LoadRobot(const std::string& path) {
  return ParseRobot(ReadFile(path), path);
}

SensorSuite ParseSuite(const std::string& text, const std::string& label) try {
  const json doc = ParseJson(text, label);

  SensorSuite suite;
  const json& sensor_list = Field(doc, "sensors", label);
  if (!sensor_list.is_array() || sensor_list.empty()) {
    throw ParseError(label + ": 'sensors' must be a non-empty array");
  }
  for (std::size_t i = 0; i < sensor_list.size(); ++i) {
    const std::string where = label + ".sensors[" + std::to_string(i) + "]";
    const json& item = sensor_list[i];
    SensorAxis axis;
    axis.name = Field(item, "name", where).get<std::string>();
    const json& parent = Field(item, "parent_joint", where);
    if (!parent.is_number_integer()) {
      throw ParseError(where + ": 'parent_joint' must be an integer");
    }
    axis.parent_joint = parent.get<int>();
    axis.offset = Transform(item, "offset", where);
    const json& axis_values = Field(item, "axis", where);
    if (!axis_values.is_array() || axis_values.size() != 6) {
      throw ParseError(where + ": 'axis' must be an array of 6 numbers");
    }
    for (int j = 0; j < 6; ++j) axis.local_axis[j] = axis_values[j].get<double>();
    if (axis.local_axis.minCoeff() < 0.0 || axis.local_axis.maxCoeff() > 1.0) {
      throw ParseError(where + ": 'axis' components must lie in [0, 1]");
    }
    if (axis.local_axis.maxCoeff() <= 0.0) {
      throw ParseError(where + ": 'axis' must have at least one positive component");
    }
    const std::string transform = Field(item, "transform", where).get<std::string>();
    if (transform == "force") {
      axis.transform = TransformKind::kForce;
    } else if (transform == "identity") {
      axis.transform = TransformKind::kIdentity;
    } else {
      throw ParseError(where + ": transform '" + transform +
                       "' is neither 'force' nor 'identity'");
    }
    suite.axes.push_back(axis);
  }
  suite.name = std::filesystem::path(label).stem().string();
  return suite;
} catch (const json::exception& e) {
  throw ParseError(label + ": " + e.what());
}

SensorSuite LoadSuite(const std::string& path) {
  return ParseSuite(ReadFile(path), path);
}

Scenario LoadScenario(const std::string& path) try {
  const json doc = ParseJson(ReadFile(path), path);
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();

  const auto resolve = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (dir / fp).string();
  };

  Trajectory trajectory;
  const json& waypoint_list = Field(doc, "waypoints", path);
  if (!waypoint_list.is_array() || waypoint_list.empty()) {
    throw ParseError(path + ": 'waypoints' must be a non-empty array");
  }
  for (std::size_t i = 0; i < waypoint_list.size(); ++i) {
    const std::string where = path + ".waypoints[" + std::to_string(i) + "]";
    const json& item = waypoint_list[i];
    Waypoint w;
    w.t = Number(item, "t", where);
    const json& q = Field(item, "q", where);
    if (!q.is_array() || q.empty()) {
      throw ParseError(where + ": 'q' must be a non-empty array");
    }
    w.q.resize(static_cast<Eigen::Index>(q.size()));
    for (std::size_t j = 0; j < q.size(); ++j) {
      w.q[static_cast<Eigen::Index>(j)] = q[j].get<double>();
    }
    trajectory.waypoints.push_back(std::move(w));
  }
  trajectory.sample_rate = Number(doc, "sample_rate", path);

  Scenario scenario{
      LoadRobot(resolve(Field(doc, "robot", path).get<std::string>())),
      LoadSuite(resolve(Field(doc, "sensors", path).get<std::string>())),
      std::move(trajectory)};
  try {
    CheckTrajectory(scenario.trajectory);
    for (const Waypoint& w : scenario.trajectory.waypoints) {
      scenario.chain.CheckConfig(w.q);
    }
  } catch (const ConfigError& e) {
    throw ParseError(path + ": " + e.what());
  }
  return scenario;
} catch (const json::exception& e) {
  throw ParseError(path + ": " + e.what());
}

std::string RobotToJson(const KinematicChain& chain) {
  json joints = json::array();
  for (const JointSpec& j : chain.joints()) {
    joints.push_back(
        {{"name", j.name},
         {"kind", j.kind == JointKind::kRevolute ? "revolute" : "prismatic"},
         {"a", j.a},
         {"alpha", j.alpha},
         {"d", j.d},
         {"theta_offset", j.theta_offset}});
  }
  const json doc{{"name", chain.name()},
                 {"base_frame", TransformToJson(chain.base_frame())},
                 {"ee_offset", TransformToJson(chain.ee_offset())},
                 {"joints", joints}};
  return doc.dump(2) + "\n";
}

std::string SuiteToJson(const SensorSuite& suite) {
  json sensors = json::array();
  for (const SensorAxis& a : suite.axes) {
    json axis = json::array();
    for (int j = 0; j < 6; ++j) axis.push_back(a.local_axis[j]);
    sensors.push_back(
        {{"name", a.name},
         {"parent_joint", a.parent_joint},
         {"offset", TransformToJson(a.offset)},
         {"axis", axis},
         {"transform", a.transform == TransformKind::kForce ? "force" : "identity"}});
  }
  return json{{"sensors", sensors}}.dump(2) + "\n";
}

std::string ScenarioToJson(const Trajectory& trajectory,
                           const std::string& robot_path,
                           const std::string& sensors_path) {
  json waypoints = json::array();
  for (const Waypoint& w : trajectory.waypoints) {
    json q = json::array();
    for (Eigen::Index j = 0; j < w.q.size(); ++j) q.push_back(w.q[j]);
    waypoints.push_back({{"t", w.t}, {"q", q}});
  }
  const json doc{{"robot", robot_path},
                 {"sensors", sensors_path},
                 {"waypoints", waypoints},
                 {"sample_rate", trajectory.sample_rate}};
  return doc.dump(2) + "\n";
}

}  // namespace sensobs
