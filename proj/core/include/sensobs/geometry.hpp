#ifndef SENSOBS_GEOMETRY_HPP_
#define SENSOBS_GEOMETRY_HPP_

#include <Eigen/Dense>

namespace sensobs {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6Xd = Eigen::Matrix<double, 6, Eigen::Dynamic>;

/// Rigid transform (rotation + translation). Composition via operator*.
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform Identity() { return RigidTransform{}; }

  /// Rotation from roll-pitch-yaw (extrinsic x-y-z, i.e. Rz(yaw)*Ry(pitch)*Rx(roll)),
  /// matching the convention of the robot/sensor description files.
  static RigidTransform FromRpyXyz(const Eigen::Vector3d& rpy,
                                   const Eigen::Vector3d& xyz);

  RigidTransform operator*(const RigidTransform& other) const {
    return {rotation * other.rotation,
            translation + rotation * other.translation};
  }

  Eigen::Vector3d operator*(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }
};

/// Recovers (roll, pitch, yaw) such that FromRpyXyz reproduces the rotation.
Eigen::Vector3d RotationToRpy(const Eigen::Matrix3d& rotation);

/// True if R is orthonormal with determinant +1 within `tol`.
bool IsRotation(const Eigen::Matrix3d& rotation, double tol = 1e-10);

}  // namespace sensobs

#endif  // SENSOBS_GEOMETRY_HPP_
