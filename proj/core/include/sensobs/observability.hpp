#ifndef SENSOBS_OBSERVABILITY_HPP_
#define SENSOBS_OBSERVABILITY_HPP_

#include <array>
#include <functional>
#include <vector>

#include "sensobs/chain.hpp"
#include "sensobs/geometry.hpp"
#include "sensobs/kinematics.hpp"
#include "sensobs/sensors.hpp"

namespace sensobs {

/// A sensor axis expressed in the task frame: the rotated 6-vector and the
/// moment arm from the sensor frame origin to the task-frame origin.
struct TaskFrameAxis {
  Vector6d axis = Vector6d::Zero();
  Eigen::Vector3d moment_arm = Eigen::Vector3d::Zero();
};

/// Rotates each local sensor axis into the task frame. The 3x3 world
/// rotation of the sensor frame is applied block-wise to the translational
/// and rotational sub-vectors; moment-arm coupling is left to the sensor
/// transform.
std::vector<TaskFrameAxis> SensorAxesInTaskFrame(const KinematicChain& chain,
                                                 const Eigen::VectorXd& q,
                                                 const SensorSuite& suite);
std::vector<TaskFrameAxis> SensorAxesInTaskFrame(const FrameSet& frames,
                                                 const KinematicChain& chain,
                                                 const SensorSuite& suite);

/// Moment arms r with ||r x axis_rot|| at or below this bound (scaled by
/// max(1, ||r||)) take the collinear branch of the force transform, where
/// the normalized cross term would be undefined.
constexpr double kCollinearTol = 1e-12;

bool ForceTransformIsCollinear(const Vector6d& task_axis,
                               const Eigen::Vector3d& moment_arm);

/// Force/torque sensor transform: rectifies both sub-vectors and, away from
/// the collinear case, adds the direction (not magnitude) of the moment
/// induced by the rotational part:
///   s_p = |axis_p| + |r x axis_rot| / ||r x axis_rot||,  s_rot = |axis_rot|
Vector6d ForceTransform(const Vector6d& task_axis,
                        const Eigen::Vector3d& moment_arm);

/// Element-wise rectification only (bidirectional sensors never subtract).
Vector6d IdentityTransform(const Vector6d& task_axis);

/// 6 x n_s matrix of transformed sensor axes, one column per axis in suite
/// order, with per-axis moment arms and collinear-branch bookkeeping.
struct ObservabilityMatrix {
  Matrix6Xd matrix;
  std::vector<Eigen::Vector3d> moment_arms;
  std::vector<bool> collinear;  // force transform took the collinear branch

  int size() const { return static_cast<int>(matrix.cols()); }
};

ObservabilityMatrix BuildObservabilityMatrix(const KinematicChain& chain,
                                             const Eigen::VectorXd& q,
                                             const SensorSuite& suite);
ObservabilityMatrix BuildObservabilityMatrix(const FrameSet& frames,
                                             const KinematicChain& chain,
                                             const SensorSuite& suite);

/// Row-wise reduction of the observability matrix to the 6-vector of
/// per-task-axis observation quality. Custom reducers may also use the
/// moment arms (e.g. to model sensor-to-sensor interaction).
using GammaFn = std::function<Vector6d(const ObservabilityMatrix&)>;

Vector6d GammaSum(const Matrix6Xd& matrix);
Vector6d GammaMax(const Matrix6Xd& matrix);
Vector6d GammaSum(const ObservabilityMatrix& om);
Vector6d GammaMax(const ObservabilityMatrix& om);

/// Product of the six components; exactly zero iff a task axis is
/// unobserved (an observability singularity).
double ObservabilityIndex(const Vector6d& s);

enum class GammaKind { kSum, kMax };

struct ObservabilityResult {
  Vector6d s = Vector6d::Zero();
  double o = 0.0;
  GammaKind gamma = GammaKind::kSum;
  Eigen::Vector3d ellipsoid_force = Eigen::Vector3d::Zero();
  Eigen::Vector3d ellipsoid_torque = Eigen::Vector3d::Zero();
  std::array<bool, 6> per_axis_flags = {};  // s_j strictly below threshold
};

/// Full pipeline: rotate axes, apply sensor transforms, reduce, take the
/// index. Ellipsoid semi-axes are the force and torque halves of s; axis j
/// is flagged when s_j < threshold (strict).
ObservabilityResult Analyze(const KinematicChain& chain, const Eigen::VectorXd& q,
                            const SensorSuite& suite, GammaKind gamma,
                            double threshold = 0.0);

/// Same pipeline with a caller-supplied reduction; `label` is recorded in
/// the result's gamma field.
ObservabilityResult AnalyzeWithGamma(const KinematicChain& chain,
                                     const Eigen::VectorXd& q,
                                     const SensorSuite& suite,
                                     const GammaFn& gamma, GammaKind label,
                                     double threshold = 0.0);

}  // namespace sensobs

#endif  // SENSOBS_OBSERVABILITY_HPP_
