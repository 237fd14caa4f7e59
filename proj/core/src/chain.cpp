#include "sensobs/chain.hpp"

#include <cmath>
#include <utility>

#include "sensobs/errors.hpp"

namespace sensobs {

KinematicChain::KinematicChain(std::string name, std::vector<JointSpec> joints,
                               const RigidTransform& base_frame,
                               const RigidTransform& ee_offset)
    : name_(std::move(name)),
      joints_(std::move(joints)),
      base_frame_(base_frame),
      ee_offset_(ee_offset) {
  if (joints_.empty()) {
    throw ConfigError("chain '" + name_ + "': needs at least one joint");
  }
  for (std::size_t k = 0; k < joints_.size(); ++k) {
    const JointSpec& j = joints_[k];
    if (!std::isfinite(j.a) || !std::isfinite(j.alpha) || !std::isfinite(j.d) ||
        !std::isfinite(j.theta_offset)) {
      throw ConfigError("chain '" + name_ + "': joint " + std::to_string(k + 1) +
                        " has non-finite DH parameters");
    }
  }
  if (!IsRotation(base_frame_.rotation)) {
    throw ConfigError("chain '" + name_ + "': base_frame rotation is not orthonormal");
  }
  if (!IsRotation(ee_offset_.rotation)) {
    throw ConfigError("chain '" + name_ + "': ee_offset rotation is not orthonormal");
  }
}

bool KinematicChain::all_revolute() const {
  for (const JointSpec& j : joints_) {
    if (j.kind != JointKind::kRevolute) return false;
  }
  return true;
}

void KinematicChain::CheckConfig(const Eigen::VectorXd& q) const {
  if (q.size() != dof()) {
    throw ConfigError("chain '" + name_ + "': configuration has " +
                      std::to_string(q.size()) + " entries, expected " +
                      std::to_string(dof()));
  }
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (!std::isfinite(q[i])) {
      throw ConfigError("chain '" + name_ + "': q[" + std::to_string(i) +
                        "] is not finite");
    }
  }
}

}  // namespace sensobs
