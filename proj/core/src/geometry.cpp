#include "sensobs/geometry.hpp"

#include <cmath>

namespace sensobs {

RigidTransform RigidTransform::FromRpyXyz(const Eigen::Vector3d& rpy,
                                          const Eigen::Vector3d& xyz) {
  const Eigen::Matrix3d r =
      (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
       Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
       Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
          .toRotationMatrix();
  return {r, xyz};
}

Eigen::Vector3d RotationToRpy(const Eigen::Matrix3d& rotation) {
  // Inverse of Rz(yaw)*Ry(pitch)*Rx(roll); eulerAngles(2,1,0) returns (yaw,pitch,roll).
  const Eigen::Vector3d zyx = rotation.eulerAngles(2, 1, 0);
  return {zyx.z(), zyx.y(), zyx.x()};
}

bool IsRotation(const Eigen::Matrix3d& rotation, double tol) {
  const double ortho =
      (rotation * rotation.transpose() - Eigen::Matrix3d::Identity())
          .cwiseAbs()
          .maxCoeff();
  return ortho <= tol && std::abs(rotation.determinant() - 1.0) <= tol;
}

}  // namespace sensobs
