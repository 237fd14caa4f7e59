#include "sensobs/singularity.hpp"

#include <algorithm>
#include <cmath>

#include "sensobs/errors.hpp"
#include "sensobs/kinematics.hpp"

namespace sensobs {

ConfigClassification Classify(const KinematicChain& chain, const Eigen::VectorXd& q,
                              const SensorSuite& suite, GammaKind gamma,
                              const ClassifyTolerances& tol) {
  if (tol.manipulability <= 0.0 || tol.nullspace <= 0.0 || tol.observability < 0.0) {
    throw ConfigError("classify: tolerances must be positive (observability >= 0)");
  }

  const FrameSet frames = ForwardKinematics(chain, q);
  const Matrix6Xd jacobian = GeometricJacobian(frames, chain);
  const ObservabilityMatrix om = BuildObservabilityMatrix(frames, chain, suite);

  ConfigClassification c;
  c.w_k = Manipulability(jacobian);
  c.o_sum = ObservabilityIndex(GammaSum(om));
  c.o_max = ObservabilityIndex(GammaMax(om));
  c.jt_nullspace_dim =
      static_cast<int>(JacobianTransposeNullspace(jacobian, tol.nullspace).size());

  const double o_selected = gamma == GammaKind::kSum ? c.o_sum : c.o_max;
  c.kinematic_singular = c.w_k < tol.manipulability;
  c.observability_singular = o_selected <= tol.observability;
  c.false_observability_singularity =
      c.jt_nullspace_dim > 0 && !c.observability_singular;
  return c;
}

SpecialCaseReport SpecialCaseCheck(const KinematicChain& chain,
                                   const Eigen::VectorXd& q) {
  if (!chain.all_revolute()) {
    throw UnsupportedChainError("special-case check: chain '" + chain.name() +
                                "' has non-revolute joints");
  }

  const SensorSuite suite = CanonicalTorqueSuite(chain);
  const FrameSet frames = ForwardKinematics(chain, q);
  const Matrix6Xd jacobian = GeometricJacobian(frames, chain);
  const ObservabilityMatrix om = BuildObservabilityMatrix(frames, chain, suite);

  SpecialCaseReport report;
  report.columns.resize(chain.dof());
  for (int k = 0; k < chain.dof(); ++k) {
    SpecialCaseColumn& col = report.columns[k];
    if (om.collinear[k]) {
      col.excluded = true;
      ++report.excluded_count;
      continue;
    }
    const Eigen::Vector3d j_p = jacobian.col(k).head<3>();
    const Eigen::Vector3d j_rot = jacobian.col(k).tail<3>();
    col.translational_deviation =
        (om.matrix.col(k).head<3>() - j_p.cwiseAbs() / j_p.norm()).norm();
    col.rotational_deviation =
        (om.matrix.col(k).tail<3>() - j_rot.cwiseAbs()).norm();
    report.max_deviation =
        std::max({report.max_deviation, col.translational_deviation,
                  col.rotational_deviation});
  }
  return report;
}

}  // namespace sensobs
