#ifndef SENSOBS_CHAIN_HPP_
#define SENSOBS_CHAIN_HPP_

#include <string>
#include <vector>

#include "sensobs/geometry.hpp"

namespace sensobs {

enum class JointKind { kRevolute, kPrismatic };

/// One joint of a serial chain, standard (distal) Denavit-Hartenberg:
///   A(q) = RotZ(theta) * TransZ(d) * TransX(a) * RotX(alpha)
/// The joint variable adds to theta for revolute joints and to d for
/// prismatic joints; theta_offset (resp. d) is the fixed part.
struct JointSpec {
  JointKind kind = JointKind::kRevolute;
  double a = 0.0;             // link length [m]
  double alpha = 0.0;         // link twist [rad]
  double d = 0.0;             // link offset [m]
  double theta_offset = 0.0;  // joint angle offset [rad]
  std::string name;
};

/// Serial kinematic chain: base transform, DH joints, end-effector offset.
///
/// Construction validates that all DH values are finite and that the base
/// and end-effector rotations are proper rotations (tolerance 1e-10).
/// Instances are immutable after construction and safe to share across
/// threads.
class KinematicChain {
 public:
  KinematicChain(std::string name, std::vector<JointSpec> joints,
                 const RigidTransform& base_frame = RigidTransform::Identity(),
                 const RigidTransform& ee_offset = RigidTransform::Identity());

  int dof() const { return static_cast<int>(joints_.size()); }
  const std::vector<JointSpec>& joints() const { return joints_; }
  const JointSpec& joint(int k) const { return joints_.at(k); }
  const RigidTransform& base_frame() const { return base_frame_; }
  const RigidTransform& ee_offset() const { return ee_offset_; }
  const std::string& name() const { return name_; }

  bool all_revolute() const;

  /// Throws ConfigError unless q has dof() finite entries.
  void CheckConfig(const Eigen::VectorXd& q) const;

 private:
  std::string name_;
  std::vector<JointSpec> joints_;
  RigidTransform base_frame_;
  RigidTransform ee_offset_;
};

}  // namespace sensobs

#endif  // SENSOBS_CHAIN_HPP_
