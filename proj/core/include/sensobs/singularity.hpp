#ifndef SENSOBS_SINGULARITY_HPP_
#define SENSOBS_SINGULARITY_HPP_

#include <vector>

#include "sensobs/chain.hpp"
#include "sensobs/observability.hpp"

namespace sensobs {

struct ClassifyTolerances {
  double manipulability = 1e-9;  // w_k below this counts as kinematic singular
  double nullspace = 1e-9;       // sigma/sigma_max below this counts as zero
  double observability = 0.0;    // o at or below this counts as obs singular
};

/// Joint classification of one configuration. A false observability
/// singularity is a nontrivial J^T null space (wrenches cancelling to zero
/// joint readings) at a configuration that is not an observability
/// singularity for the selected gamma.
struct ConfigClassification {
  double w_k = 0.0;
  double o_sum = 0.0;
  double o_max = 0.0;
  bool kinematic_singular = false;
  bool observability_singular = false;
  int jt_nullspace_dim = 0;
  bool false_observability_singularity = false;
};

ConfigClassification Classify(const KinematicChain& chain, const Eigen::VectorXd& q,
                              const SensorSuite& suite, GammaKind gamma,
                              const ClassifyTolerances& tol = {});

/// Per-column comparison between the observability matrix of the canonical
/// torque suite and the geometric Jacobian mapped column-wise to
/// [ |J_p|/||J_p|| ; |J_rot| ]. Columns whose force transform takes the
/// collinear branch are excluded (the normalization is undefined on both
/// sides there) and counted instead of silently skipped.
struct SpecialCaseColumn {
  double translational_deviation = 0.0;
  double rotational_deviation = 0.0;
  bool excluded = false;
};

struct SpecialCaseReport {
  std::vector<SpecialCaseColumn> columns;
  double max_deviation = 0.0;  // over non-excluded columns
  int excluded_count = 0;
};

/// Requires an all-revolute chain (throws UnsupportedChainError otherwise);
/// the canonical torque suite is generated internally.
SpecialCaseReport SpecialCaseCheck(const KinematicChain& chain,
                                   const Eigen::VectorXd& q);

}  // namespace sensobs

#endif  // SENSOBS_SINGULARITY_HPP_
