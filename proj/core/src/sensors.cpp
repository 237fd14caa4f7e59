#include "sensobs/sensors.hpp"

#include <cmath>

#include "sensobs/errors.hpp"

namespace sensobs {

void CheckSuite(const SensorSuite& suite, const KinematicChain& chain) {
  if (suite.axes.empty()) {
    throw ConfigError("suite '" + suite.name + "': needs at least one sensor axis");
  }
  for (const SensorAxis& axis : suite.axes) {
    if (axis.parent_joint < 1 || axis.parent_joint > chain.dof()) {
      throw ConfigError("sensor '" + axis.name + "': parent_joint " +
                        std::to_string(axis.parent_joint) +
                        " outside [1, " + std::to_string(chain.dof()) + "]");
    }
    if (!IsRotation(axis.offset.rotation)) {
      throw ConfigError("sensor '" + axis.name + "': offset rotation is not orthonormal");
    }
    bool any_positive = false;
    for (int j = 0; j < 6; ++j) {
      const double c = axis.local_axis[j];
      if (!std::isfinite(c) || c < 0.0 || c > 1.0) {
        throw ConfigError("sensor '" + axis.name + "': axis component " +
                          std::to_string(j) + " outside [0, 1]");
      }
      any_positive = any_positive || c > 0.0;
    }
    if (!any_positive) {
      throw ConfigError("sensor '" + axis.name + "': axis is all zeros");
    }
  }
}

SensorSuite CanonicalTorqueSuite(const KinematicChain& chain) {
  SensorSuite suite;
  suite.name = chain.name() + "-torque";
  for (int k = 0; k < chain.dof(); ++k) {
    if (chain.joint(k).kind != JointKind::kRevolute) {
      throw UnsupportedChainError("canonical torque suite: joint " +
                                  std::to_string(k + 1) + " of chain '" +
                                  chain.name() + "' is not revolute");
    }
    SensorAxis axis;
    axis.name = "tau" + std::to_string(k + 1);
    axis.parent_joint = k + 1;
    axis.offset = RigidTransform::Identity();
    axis.local_axis.setZero();
    axis.local_axis[5] = 1.0;  // torque about the joint z axis
    axis.transform = TransformKind::kForce;
    suite.axes.push_back(axis);
  }
  return suite;
}

SensorSuite EndEffectorSixAxisSuite(const KinematicChain& chain) {
  static const char* kAxisNames[6] = {"fx", "fy", "fz", "taux", "tauy", "tauz"};

  // Bridge from the last joint frame to the end effector: the remaining
  // link tail TransX(a)*RotX(alpha) composed with the chain's ee offset.
  const JointSpec& last = chain.joint(chain.dof() - 1);
  RigidTransform tail;
  tail.rotation = Eigen::AngleAxisd(last.alpha, Eigen::Vector3d::UnitX())
                      .toRotationMatrix();
  tail.translation = Eigen::Vector3d(last.a, 0.0, 0.0);
  const RigidTransform to_ee = tail * chain.ee_offset();

  SensorSuite suite;
  suite.name = chain.name() + "-ee-ft";
  for (int j = 0; j < 6; ++j) {
    SensorAxis axis;
    axis.name = kAxisNames[j];
    axis.parent_joint = chain.dof();
    axis.offset = to_ee;
    axis.local_axis.setZero();
    axis.local_axis[j] = 1.0;
    axis.transform = TransformKind::kForce;
    suite.axes.push_back(axis);
  }
  return suite;
}

}  // namespace sensobs
