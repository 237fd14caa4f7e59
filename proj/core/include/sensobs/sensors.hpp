#ifndef SENSOBS_SENSORS_HPP_
#define SENSOBS_SENSORS_HPP_

#include <string>
#include <vector>

#include "sensobs/chain.hpp"
#include "sensobs/geometry.hpp"

namespace sensobs {

/// Sensor-type-dependent transform applied when expressing an axis at the
/// task frame. Force picks up moment-arm coupling; Identity only rectifies.
enum class TransformKind { kForce, kIdentity };

/// One individually measured sensor axis. A multi-axis physical device is
/// entered as one SensorAxis per measured axis, so n_s counts axes, not
/// devices.
///
/// The local axis is a 6-vector (translational part first, rotational part
/// last) with components in [0,1] describing which directions of the local
/// sensor frame the axis observes. The sensor frame is `offset` composed
/// onto the parent joint frame, so it moves with the parent link; any
/// placement along a link is expressed through the offset.
struct SensorAxis {
  std::string name;
  int parent_joint = 1;  // 1-based joint index, in [1, n_q]
  RigidTransform offset;
  Vector6d local_axis = Vector6d::Zero();
  TransformKind transform = TransformKind::kForce;
};

struct SensorSuite {
  std::string name;
  std::vector<SensorAxis> axes;

  int size() const { return static_cast<int>(axes.size()); }
};

/// Validates suite against a chain: nonempty, parents in range, offset
/// rotations orthonormal, axis components in [0,1] with at least one
/// positive. Throws ConfigError on violation.
void CheckSuite(const SensorSuite& suite, const KinematicChain& chain);

/// One joint torque axis per joint (local axis e6, zero offset, force
/// transform): the standard instrumentation of a serial manipulator with
/// torque sensing at every revolute joint. Throws UnsupportedChainError if
/// the chain has a prismatic joint.
SensorSuite CanonicalTorqueSuite(const KinematicChain& chain);

/// Six-axis force-torque sensor at the end effector of the given chain
/// (six unit axes, zero moment arm when the chain's last joint frame
/// coincides with the end-effector origin).
SensorSuite EndEffectorSixAxisSuite(const KinematicChain& chain);

}  // namespace sensobs

#endif  // SENSOBS_SENSORS_HPP_
