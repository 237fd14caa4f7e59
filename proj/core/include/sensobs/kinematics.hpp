#ifndef SENSOBS_KINEMATICS_HPP_
#define SENSOBS_KINEMATICS_HPP_

#include <vector>

#include "sensobs/chain.hpp"
#include "sensobs/geometry.hpp"

namespace sensobs {

/// World-frame poses of every joint frame plus the task frame.
///
/// joint frame k is anchored on joint k's axis (after the joint displacement)
/// with its z axis along the axis of motion; it moves with link k. The task
/// frame sits at the end-effector origin but is aligned with the world frame,
/// so ee_rotation is always the identity.
struct FrameSet {
  std::vector<Eigen::Vector3d> joint_origins;
  std::vector<Eigen::Matrix3d> joint_rotations;
  Eigen::Vector3d ee_origin = Eigen::Vector3d::Zero();
  Eigen::Matrix3d ee_rotation = Eigen::Matrix3d::Identity();
};

FrameSet ForwardKinematics(const KinematicChain& chain, const Eigen::VectorXd& q);

/// 6 x n_q geometric Jacobian at the task-frame origin; rows ordered
/// (v_x, v_y, v_z, w_x, w_y, w_z). Column k is [z_k x r_k ; z_k] for a
/// revolute joint and [z_k ; 0] for a prismatic joint, with r_k the vector
/// from the joint-k origin to the task-frame origin.
Matrix6Xd GeometricJacobian(const KinematicChain& chain, const Eigen::VectorXd& q);
Matrix6Xd GeometricJacobian(const FrameSet& frames, const KinematicChain& chain);

/// Row indices for restricting the Jacobian to a task-space sub-block.
inline const std::vector<int> kAllRows = {0, 1, 2, 3, 4, 5};
inline const std::vector<int> kPositionRows = {0, 1, 2};
inline const std::vector<int> kOrientationRows = {3, 4, 5};

/// Kinematic manipulability sqrt(det(J_sel * J_sel^T)) over the selected
/// rows (default: all six). Returns exactly 0 when det falls below the
/// double-precision singularity floor of 1e-18.
double Manipulability(const Matrix6Xd& jacobian,
                      const std::vector<int>& rows = kAllRows);

/// Orthonormal basis of the wrench directions f with ||J^T f|| <= tol *
/// sigma_max(J) * ||f||, from singular-value thresholding of J. Empty when
/// J^T has no such directions (J has full row rank well above tol).
std::vector<Vector6d> JacobianTransposeNullspace(const Matrix6Xd& jacobian,
                                                 double tol);

}  // namespace sensobs

#endif  // SENSOBS_KINEMATICS_HPP_
