#ifndef SENSOBS_SWEEP_HPP_
#define SENSOBS_SWEEP_HPP_

#include <iosfwd>
#include <vector>

#include "sensobs/chain.hpp"
#include "sensobs/sensors.hpp"

namespace sensobs {

struct Waypoint {
  double t = 0.0;  // [s]
  Eigen::VectorXd q;
};

/// Joint-space trajectory through waypoints, interpolated piecewise
/// linearly per joint and sampled at a fixed rate.
struct Trajectory {
  std::vector<Waypoint> waypoints;
  double sample_rate = 100.0;  // [Hz]
};

/// Throws ConfigError unless times strictly increase, all waypoints share
/// one dimension, and the sample rate is positive.
void CheckTrajectory(const Trajectory& trajectory);

/// Piecewise-linear interpolation; exact at waypoint times. Throws
/// ConfigError when t is outside [first, last].
Eigen::VectorXd Interpolate(const Trajectory& trajectory, double t);

struct SweepSample {
  double t = 0.0;
  Eigen::VectorXd q;
  double w_k = 0.0;
  double o_sum = 0.0;
  double o_max = 0.0;
};

/// Raw index series plus per-series normalization constants and normalized
/// columns. Normalized values are raw/max (so the peak is exactly 1) when
/// the raw maximum is positive, and all zeros otherwise.
struct SweepSeries {
  std::vector<SweepSample> samples;
  double wk_max = 0.0;
  double o_sum_max = 0.0;
  double o_max_max = 0.0;
  std::vector<double> wk_norm;
  std::vector<double> o_sum_norm;
  std::vector<double> o_max_norm;
};

/// Samples the trajectory on the grid t0 + k/sample_rate (the final
/// waypoint time included when it lands on the grid) and evaluates w_k and
/// both observability indices at every sample.
SweepSeries Sweep(const KinematicChain& chain, const SensorSuite& suite,
                  const Trajectory& trajectory);

/// CSV with header t,q1..qn,wk,o_sum,o_max,wk_norm,o_sum_norm,o_max_norm,
/// 9 significant digits, '.' decimal point, '\n' line ends.
void WriteSweepCsv(const SweepSeries& series, std::ostream& out);

}  // namespace sensobs

#endif  // SENSOBS_SWEEP_HPP_
