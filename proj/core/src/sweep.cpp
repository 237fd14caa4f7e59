#include "sensobs/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "sensobs/errors.hpp"
#include "sensobs/kinematics.hpp"
#include "sensobs/observability.hpp"

namespace sensobs {

void CheckTrajectory(const Trajectory& trajectory) {
  if (trajectory.waypoints.empty()) {
    throw ConfigError("trajectory: needs at least one waypoint");
  }
  if (!(trajectory.sample_rate > 0.0) || !std::isfinite(trajectory.sample_rate)) {
    throw ConfigError("trajectory: sample_rate must be positive");
  }
  const Eigen::Index dim = trajectory.waypoints.front().q.size();
  for (std::size_t i = 0; i < trajectory.waypoints.size(); ++i) {
    const Waypoint& w = trajectory.waypoints[i];
    if (!std::isfinite(w.t)) {
      throw ConfigError("trajectory: waypoint " + std::to_string(i) +
                        " has non-finite time");
    }
    if (w.q.size() != dim) {
      throw ConfigError("trajectory: waypoint " + std::to_string(i) + " has " +
                        std::to_string(w.q.size()) + " joints, expected " +
                        std::to_string(dim));
    }
    if (i > 0 && !(w.t > trajectory.waypoints[i - 1].t)) {
      throw ConfigError("trajectory: waypoint times must strictly increase");
    }
  }
}

Eigen::VectorXd Interpolate(const Trajectory& trajectory, double t) {
  CheckTrajectory(trajectory);
  const auto& wp = trajectory.waypoints;
  if (t < wp.front().t || t > wp.back().t) {
    throw ConfigError("interpolate: t = " + std::to_string(t) + " outside [" +
                      std::to_string(wp.front().t) + ", " +
                      std::to_string(wp.back().t) + "]");
  }
  for (std::size_t i = 0; i < wp.size(); ++i) {
    if (t == wp[i].t) return wp[i].q;  // waypoint times reproduce exactly
  }
  std::size_t seg = 0;
  while (seg + 2 < wp.size() && t > wp[seg + 1].t) ++seg;
  const double u = (t - wp[seg].t) / (wp[seg + 1].t - wp[seg].t);
  return (1.0 - u) * wp[seg].q + u * wp[seg + 1].q;
}

namespace {

std::vector<double> Normalize(const std::vector<SweepSample>& samples,
                              double SweepSample::*member, double max_value) {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const SweepSample& s : samples) {
    out.push_back(max_value > 0.0 ? s.*member / max_value : 0.0);
  }
  return out;
}

}  // namespace

SweepSeries Sweep(const KinematicChain& chain, const SensorSuite& suite,
                  const Trajectory& trajectory) {
  CheckTrajectory(trajectory);
  CheckSuite(suite, chain);

  const double t0 = trajectory.waypoints.front().t;
  const double t_end = trajectory.waypoints.back().t;

  SweepSeries series;
  for (long k = 0;; ++k) {
    const double t = t0 + static_cast<double>(k) / trajectory.sample_rate;
    if (t > t_end) break;

    SweepSample sample;
    sample.t = t;
    sample.q = Interpolate(trajectory, t);

    const FrameSet frames = ForwardKinematics(chain, sample.q);
    const Matrix6Xd jacobian = GeometricJacobian(frames, chain);
    const ObservabilityMatrix om = BuildObservabilityMatrix(frames, chain, suite);
    sample.w_k = Manipulability(jacobian);
    sample.o_sum = ObservabilityIndex(GammaSum(om));
    sample.o_max = ObservabilityIndex(GammaMax(om));

    series.wk_max = std::max(series.wk_max, sample.w_k);
    series.o_sum_max = std::max(series.o_sum_max, sample.o_sum);
    series.o_max_max = std::max(series.o_max_max, sample.o_max);
    series.samples.push_back(std::move(sample));
  }

  series.wk_norm = Normalize(series.samples, &SweepSample::w_k, series.wk_max);
  series.o_sum_norm = Normalize(series.samples, &SweepSample::o_sum, series.o_sum_max);
  series.o_max_norm = Normalize(series.samples, &SweepSample::o_max, series.o_max_max);
  return series;
}

void WriteSweepCsv(const SweepSeries& series, std::ostream& out) {
  const Eigen::Index n =
      series.samples.empty() ? 0 : series.samples.front().q.size();

  out << "t";
  for (Eigen::Index j = 0; j < n; ++j) out << ",q" << (j + 1);
  out << ",wk,o_sum,o_max,wk_norm,o_sum_norm,o_max_norm\n";

  char buf[32];
  const auto put = [&](double v, char lead) {
    if (lead) out << lead;
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    out << buf;
  };

  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    const SweepSample& s = series.samples[i];
    put(s.t, 0);
    for (Eigen::Index j = 0; j < n; ++j) put(s.q[j], ',');
    put(s.w_k, ',');
    put(s.o_sum, ',');
    put(s.o_max, ',');
    put(series.wk_norm[i], ',');
    put(series.o_sum_norm[i], ',');
    put(series.o_max_norm[i], ',');
    out << "\n";
  }
}

}  // namespace sensobs
