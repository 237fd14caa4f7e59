#include "sensobs/kinematics.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "sensobs/errors.hpp"

namespace sensobs {
namespace {

constexpr double kSingularDetFloor = 1e-18;  // w_k floor is sqrt of this

// Standard DH link transform RotZ(theta)*TransZ(d)*TransX(a)*RotX(alpha).
RigidTransform DhTransform(double theta, double d, double a, double alpha) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  RigidTransform t;
  t.rotation << ct, -st * ca, st * sa,
                st, ct * ca, -ct * sa,
                0.0, sa, ca;
  t.translation << a * ct, a * st, d;
  return t;
}

}  // namespace

FrameSet ForwardKinematics(const KinematicChain& chain, const Eigen::VectorXd& q) {
  chain.CheckConfig(q);

  FrameSet frames;
  frames.joint_origins.reserve(chain.dof());
  frames.joint_rotations.reserve(chain.dof());

  RigidTransform t = chain.base_frame();
  for (int k = 0; k < chain.dof(); ++k) {
    const JointSpec& j = chain.joint(k);
    const double theta =
        j.theta_offset + (j.kind == JointKind::kRevolute ? q[k] : 0.0);
    const double d = j.d + (j.kind == JointKind::kPrismatic ? q[k] : 0.0);

    // Joint frame: after the joint displacement, before the link geometry.
    // Its origin lies on the joint axis and its z axis is the axis of motion.
    const RigidTransform joint_frame = t * DhTransform(theta, d, 0.0, 0.0);
    frames.joint_origins.push_back(joint_frame.translation);
    frames.joint_rotations.push_back(joint_frame.rotation);

    t = t * DhTransform(theta, d, j.a, j.alpha);
  }

  const RigidTransform ee = t * chain.ee_offset();
  frames.ee_origin = ee.translation;
  frames.ee_rotation = Eigen::Matrix3d::Identity();  // task frame is world-aligned
  return frames;
}

Matrix6Xd GeometricJacobian(const FrameSet& frames, const KinematicChain& chain) {
  const int n = chain.dof();
  Matrix6Xd jac(6, n);
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector3d z = frames.joint_rotations[k].col(2);
    if (chain.joint(k).kind == JointKind::kRevolute) {
      const Eigen::Vector3d r = frames.ee_origin - frames.joint_origins[k];
      jac.col(k).head<3>() = z.cross(r);
      jac.col(k).tail<3>() = z;
    } else {
      jac.col(k).head<3>() = z;
      jac.col(k).tail<3>().setZero();
    }
  }
  return jac;
}

Matrix6Xd GeometricJacobian(const KinematicChain& chain, const Eigen::VectorXd& q) {
  return GeometricJacobian(ForwardKinematics(chain, q), chain);
}

double Manipulability(const Matrix6Xd& jacobian, const std::vector<int>& rows) {
  if (rows.empty()) {
    throw ConfigError("manipulability: empty row selection");
  }
  Eigen::MatrixXd sel(rows.size(), jacobian.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] > 5) {
      throw ConfigError("manipulability: row index out of range [0,5]");
    }
    sel.row(i) = jacobian.row(rows[i]);
  }
  const double det = (sel * sel.transpose()).determinant();
  if (det < kSingularDetFloor) return 0.0;
  return std::sqrt(det);
}

std::vector<Vector6d> JacobianTransposeNullspace(const Matrix6Xd& jacobian,
                                                 double tol) {
  if (tol <= 0.0) {
    throw ConfigError("nullspace: tolerance must be positive");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian, Eigen::ComputeFullU);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma[0] : 0.0;

  std::vector<Vector6d> basis;
  for (int i = 0; i < 6; ++i) {
    // Left-singular directions beyond min(6, n_q) have no singular value:
    // they are exact null directions of J^T.
    const double s = i < sigma.size() ? sigma[i] : 0.0;
    if (s <= tol * sigma_max) {
      basis.emplace_back(svd.matrixU().col(i));
    }
  }
  return basis;
}

}  // namespace sensobs
