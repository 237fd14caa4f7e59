#include <random>

#include <benchmark/benchmark.h>

#include "sensobs/kinematics.hpp"
#include "sensobs/observability.hpp"
#include "sensobs/presets.hpp"
#include "sensobs/singularity.hpp"
#include "sensobs/sweep.hpp"

using namespace sensobs;

namespace {

Eigen::VectorXd SomePose() {
  Eigen::VectorXd q(7);
  q << 0.4, -0.9, 0.25, 1.1, -0.5, 0.6, 0.0;
  return q;
}

void BM_ForwardKinematics(benchmark::State& state) {
  const KinematicChain chain = presets::Robot("baxter-like-7dof");
  const Eigen::VectorXd q = SomePose();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ForwardKinematics(chain, q));
  }
}
BENCHMARK(BM_ForwardKinematics);

void BM_GeometricJacobian(benchmark::State& state) {
  const KinematicChain chain = presets::Robot("baxter-like-7dof");
  const Eigen::VectorXd q = SomePose();
  for (auto _ : state) {
    benchmark::DoNotOptimize(GeometricJacobian(chain, q));
  }
}
BENCHMARK(BM_GeometricJacobian);

void BM_Analyze(benchmark::State& state) {
  const KinematicChain chain = presets::Robot("baxter-like-7dof");
  const SensorSuite suite = CanonicalTorqueSuite(chain);
  const Eigen::VectorXd q = SomePose();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Analyze(chain, q, suite, GammaKind::kSum, 0.0));
  }
}
BENCHMARK(BM_Analyze);

void BM_Classify(benchmark::State& state) {
  const KinematicChain chain = presets::Robot("baxter-like-7dof");
  const SensorSuite suite = CanonicalTorqueSuite(chain);
  const Eigen::VectorXd q = SomePose();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Classify(chain, q, suite, GammaKind::kSum));
  }
}
BENCHMARK(BM_Classify);

void BM_SweepSecond(benchmark::State& state) {
  const presets::ScenarioPreset preset = presets::Scenario("baxter-like-7dof-sweep");
  const KinematicChain chain = presets::Robot(preset.robot);
  const SensorSuite suite = presets::Suite(preset.suite);
  Trajectory traj = preset.trajectory;
  traj.waypoints.resize(2);  // one 4 s segment
  traj.sample_rate = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sweep(chain, suite, traj));
  }
}
BENCHMARK(BM_SweepSecond);

}  // namespace

BENCHMARK_MAIN();
