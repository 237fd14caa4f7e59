#include "sensobs/observability.hpp"

#include <cmath>

#include "sensobs/errors.hpp"

namespace sensobs {

std::vector<TaskFrameAxis> SensorAxesInTaskFrame(const FrameSet& frames,
                                                 const KinematicChain& chain,
                                                 const SensorSuite& suite) {
  CheckSuite(suite, chain);

  std::vector<TaskFrameAxis> out;
  out.reserve(suite.axes.size());
  for (const SensorAxis& sensor : suite.axes) {
    const int k = sensor.parent_joint - 1;
    const Eigen::Matrix3d rotation =
        frames.joint_rotations[k] * sensor.offset.rotation;
    const Eigen::Vector3d origin =
        frames.joint_origins[k] + frames.joint_rotations[k] * sensor.offset.translation;

    // The task frame is world-aligned, so the sensor frame's world rotation
    // maps local axes straight into task coordinates.
    TaskFrameAxis t;
    t.axis.head<3>() = rotation * sensor.local_axis.head<3>();
    t.axis.tail<3>() = rotation * sensor.local_axis.tail<3>();
    t.moment_arm = frames.ee_origin - origin;
    out.push_back(t);
  }
  return out;
}

std::vector<TaskFrameAxis> SensorAxesInTaskFrame(const KinematicChain& chain,
                                                 const Eigen::VectorXd& q,
                                                 const SensorSuite& suite) {
  return SensorAxesInTaskFrame(ForwardKinematics(chain, q), chain, suite);
}

bool ForceTransformIsCollinear(const Vector6d& task_axis,
                               const Eigen::Vector3d& moment_arm) {
  const Eigen::Vector3d cross = moment_arm.cross(Eigen::Vector3d(task_axis.tail<3>()));
  return cross.norm() <= kCollinearTol * std::max(1.0, moment_arm.norm());
}

Vector6d ForceTransform(const Vector6d& task_axis,
                        const Eigen::Vector3d& moment_arm) {
  const Eigen::Vector3d rot_part = task_axis.tail<3>();
  const Eigen::Vector3d cross = moment_arm.cross(rot_part);
  const double cross_norm = cross.norm();

  Vector6d out;
  out.tail<3>() = rot_part.cwiseAbs();
  if (cross_norm <= kCollinearTol * std::max(1.0, moment_arm.norm())) {
    out.head<3>() = task_axis.head<3>().cwiseAbs();
  } else {
    // Normalized so the moment arm's magnitude does not weight the result.
    out.head<3>() = task_axis.head<3>().cwiseAbs() + cross.cwiseAbs() / cross_norm;
  }
  return out;
}

Vector6d IdentityTransform(const Vector6d& task_axis) {
  return task_axis.cwiseAbs();
}

ObservabilityMatrix BuildObservabilityMatrix(const FrameSet& frames,
                                             const KinematicChain& chain,
                                             const SensorSuite& suite) {
  const std::vector<TaskFrameAxis> axes = SensorAxesInTaskFrame(frames, chain, suite);

  ObservabilityMatrix om;
  om.matrix.resize(6, static_cast<Eigen::Index>(axes.size()));
  om.moment_arms.reserve(axes.size());
  om.collinear.assign(axes.size(), false);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    switch (suite.axes[i].transform) {
      case TransformKind::kForce:
        om.collinear[i] = ForceTransformIsCollinear(axes[i].axis, axes[i].moment_arm);
        om.matrix.col(static_cast<Eigen::Index>(i)) =
            ForceTransform(axes[i].axis, axes[i].moment_arm);
        break;
      case TransformKind::kIdentity:
        om.matrix.col(static_cast<Eigen::Index>(i)) = IdentityTransform(axes[i].axis);
        break;
    }
    om.moment_arms.push_back(axes[i].moment_arm);
  }
  return om;
}

ObservabilityMatrix BuildObservabilityMatrix(const KinematicChain& chain,
                                             const Eigen::VectorXd& q,
                                             const SensorSuite& suite) {
  return BuildObservabilityMatrix(ForwardKinematics(chain, q), chain, suite);
}

Vector6d GammaSum(const Matrix6Xd& matrix) { return matrix.rowwise().sum(); }

Vector6d GammaMax(const Matrix6Xd& matrix) {
  if (matrix.cols() == 0) {
    throw ConfigError("gamma_max: observability matrix has no columns");
  }
  return matrix.rowwise().maxCoeff();
}

Vector6d GammaSum(const ObservabilityMatrix& om) { return GammaSum(om.matrix); }
Vector6d GammaMax(const ObservabilityMatrix& om) { return GammaMax(om.matrix); }

double ObservabilityIndex(const Vector6d& s) { return s.prod(); }

namespace {

ObservabilityResult FinishAnalysis(const Vector6d& s, GammaKind label,
                                   double threshold) {
  ObservabilityResult result;
  result.s = s;
  result.o = ObservabilityIndex(s);
  result.gamma = label;
  result.ellipsoid_force = s.head<3>();
  result.ellipsoid_torque = s.tail<3>();
  for (int j = 0; j < 6; ++j) {
    result.per_axis_flags[j] = s[j] < threshold;
  }
  return result;
}

}  // namespace

ObservabilityResult AnalyzeWithGamma(const KinematicChain& chain,
                                     const Eigen::VectorXd& q,
                                     const SensorSuite& suite,
                                     const GammaFn& gamma, GammaKind label,
                                     double threshold) {
  if (threshold < 0.0) {
    throw ConfigError("analyze: threshold must be >= 0");
  }
  return FinishAnalysis(gamma(BuildObservabilityMatrix(chain, q, suite)), label,
                        threshold);
}

ObservabilityResult Analyze(const KinematicChain& chain, const Eigen::VectorXd& q,
                            const SensorSuite& suite, GammaKind gamma,
                            double threshold) {
  if (threshold < 0.0) {
    throw ConfigError("analyze: threshold must be >= 0");
  }
  const ObservabilityMatrix om = BuildObservabilityMatrix(chain, q, suite);
  const Vector6d s = gamma == GammaKind::kSum ? GammaSum(om) : GammaMax(om);
  return FinishAnalysis(s, gamma, threshold);
}

}  // namespace sensobs
