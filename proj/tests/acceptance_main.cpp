// Acceptance suite: one pass/fail line per criterion. Takes the CLI binary
// path as argv[1] (needed for the determinism checks); without it those
// checks fail rather than silently pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/SVD>

#include "sensobs/io.hpp"
#include "sensobs/kinematics.hpp"
#include "sensobs/observability.hpp"
#include "sensobs/presets.hpp"
#include "sensobs/singularity.hpp"
#include "sensobs/sweep.hpp"

using namespace sensobs;

namespace {

int g_failures = 0;
std::string g_detail;

#define REQUIRE_THAT(cond, what)                                   \
  do {                                                             \
    if (!(cond)) {                                                 \
      g_detail += std::string("\n      failed: ") + (what);        \
      return false;                                                \
    }                                                              \
  } while (0)

void Run(int number, const char* title, const std::function<bool()>& fn) {
  g_detail.clear();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    g_detail += std::string("\n      exception: ") + e.what();
  }
  std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, title,
              g_detail.c_str());
  if (!ok) ++g_failures;
}

std::mt19937_64 g_rng(20240811);

Eigen::VectorXd RandomConfig(int dof) {
  std::uniform_real_distribution<double> dist(-M_PI, M_PI);
  Eigen::VectorXd q(dof);
  for (int i = 0; i < dof; ++i) q[i] = dist(g_rng);
  return q;
}

double SigmaRatio(const Matrix6Xd& jac) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  return sv[sv.size() - 1] / sv[0];
}

// --- criterion 1: special-case equivalence ---------------------------------

bool SpecialCaseEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  int excluded_total = 0;
  double worst = 0.0;
  for (const std::string& name : presets::RobotNames()) {
    const KinematicChain chain = presets::Robot(name);
    for (int trial = 0; trial < 100; ++trial) {
      const SpecialCaseReport report = SpecialCaseCheck(chain, RandomConfig(chain.dof()));
      excluded_total += report.excluded_count;
      worst = std::max(worst, report.max_deviation);
      REQUIRE_THAT(report.max_deviation <= 1e-12,
                   name + ": column deviation " + std::to_string(report.max_deviation));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("      (300 configs, max deviation %.3g, %d excluded columns, %.3f s)\n",
              worst, excluded_total, seconds);
  REQUIRE_THAT(seconds < 1.0, "runtime " + std::to_string(seconds) + " s >= 1 s");
  return true;
}

// --- criterion 2: observability singularity detection -----------------------

bool ExtendedPlanarSingularity() {
  const KinematicChain chain = presets::Robot("planar-2r");
  const SensorSuite suite = CanonicalTorqueSuite(chain);
  const Eigen::VectorXd q = Eigen::VectorXd::Zero(2);

  const ObservabilityResult sum = Analyze(chain, q, suite, GammaKind::kSum);
  const ObservabilityResult max = Analyze(chain, q, suite, GammaKind::kMax);
  REQUIRE_THAT(sum.s[0] == 0.0, "s_fx (sum) not exactly zero");
  REQUIRE_THAT(max.s[0] == 0.0, "s_fx (max) not exactly zero");
  REQUIRE_THAT(sum.o == 0.0, "o (sum) not exactly zero");
  REQUIRE_THAT(max.o == 0.0, "o (max) not exactly zero");

  // Brute-force oracle: the pure x-force wrench produces no joint readings.
  const Matrix6Xd jac = GeometricJacobian(chain, q);
  const Eigen::VectorXd torques = jac.transpose() * Vector6d::Unit(0);
  REQUIRE_THAT(torques.isZero(0.0), "J^T e1 is not exactly zero");
  return true;
}

// --- criterion 3: singularity-type independence ------------------------------

bool SingularityTypeIndependence() {
  const KinematicChain chain = presets::Robot("baxter-like-7dof");
  const SensorSuite suite = CanonicalTorqueSuite(chain);

  // (a) kinematic-only: wrist axis brought over the base axis
  const Eigen::VectorXd q_kin = presets::WristOverBasePose();
  const ConfigClassification a = Classify(chain, q_kin, suite, GammaKind::kSum);
  REQUIRE_THAT(a.w_k < 1e-9, "w_k = " + std::to_string(a.w_k));
  REQUIRE_THAT(a.o_sum > 1e-6, "o_sum = " + std::to_string(a.o_sum));
  REQUIRE_THAT(SigmaRatio(GeometricJacobian(chain, q_kin)) < 1e-9,
               "SVD oracle: sigma ratio at the kinematic-only pose");

  // (b) false observability singularity: horizontal reach, wrist tilted
  const Eigen::VectorXd q_tilt = presets::TiltedReachPose();
  const ConfigClassification b = Classify(chain, q_tilt, suite, GammaKind::kSum);
  REQUIRE_THAT(b.jt_nullspace_dim >= 1, "J^T null space is empty");
  REQUIRE_THAT(b.o_sum > 1e-6, "o_sum = " + std::to_string(b.o_sum));
  REQUIRE_THAT(b.false_observability_singularity, "not classified as false singularity");
  REQUIRE_THAT(SigmaRatio(GeometricJacobian(chain, q_tilt)) < 1e-9,
               "SVD oracle: sigma ratio at the tilted pose");
  return true;
}

// --- criterion 4: moment-arm invariance -------------------------------------

bool MomentArmInvariance() {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> pow2(-9, 9);

  int checked = 0;
  while (checked < 1000) {
    Vector6d axis;
    for (int i = 0; i < 6; ++i) axis[i] = std::abs(unit(g_rng));
    const Eigen::Vector3d r(unit(g_rng), unit(g_rng), unit(g_rng));
    // Stay away from the collinearity tolerance boundary.
    if (r.cross(Eigen::Vector3d(axis.tail<3>())).norm() < 1e-6) continue;

    // Power-of-two factors keep lambda*r exact, so invariance must be exact.
    const double lambda = std::ldexp(1.0, pow2(g_rng));
    const Vector6d a = ForceTransform(axis, r);
    const Vector6d b = ForceTransform(axis, lambda * r);
    REQUIRE_THAT(a == b, "exact invariance violated at lambda = " + std::to_string(lambda));
    ++checked;
  }
  return true;
}

// --- criterion 5: row-zero <=> o = 0 ----------------------------------------

bool RowZeroEquivalence() {
  std::uniform_real_distribution<double> entry(1e-3, 2.0);
  std::bernoulli_distribution sparse(0.3);

  for (int trial = 0; trial < 1000; ++trial) {
    const int cols = 1 + static_cast<int>(g_rng() % 9);
    Matrix6Xd s(6, cols);
    for (int j = 0; j < 6; ++j) {
      for (int i = 0; i < cols; ++i) s(j, i) = sparse(g_rng) ? 0.0 : entry(g_rng);
    }
    if (trial % 2 == 0) s.row(static_cast<Eigen::Index>(g_rng() % 6)).setZero();

    bool zero_row = false;
    for (int j = 0; j < 6; ++j) zero_row = zero_row || s.row(j).isZero(0.0);

    const bool sum_zero = ObservabilityIndex(GammaSum(s)) == 0.0;
    const bool max_zero = ObservabilityIndex(GammaMax(s)) == 0.0;
    REQUIRE_THAT(sum_zero == zero_row, "gamma_sum mismatch at trial " + std::to_string(trial));
    REQUIRE_THAT(max_zero == zero_row, "gamma_max mismatch at trial " + std::to_string(trial));
  }
  return true;
}

// --- criterion 6: Jacobian correctness ---------------------------------------

Vector6d FiniteDifferenceColumn(const KinematicChain& chain,
                                const Eigen::VectorXd& q, int k) {
  const double step = 1e-6;
  Eigen::VectorXd qp = q, qm = q;
  qp[k] += step;
  qm[k] -= step;
  const FrameSet fp = ForwardKinematics(chain, qp);
  const FrameSet fm = ForwardKinematics(chain, qm);
  Vector6d col;
  col.head<3>() = (fp.ee_origin - fm.ee_origin) / (2.0 * step);
  const Eigen::AngleAxisd aa(fp.joint_rotations.back() *
                             fm.joint_rotations.back().transpose());
  col.tail<3>() = aa.angle() * aa.axis() / (2.0 * step);
  return col;
}

bool JacobianCorrectness() {
  double worst = 0.0;
  for (const std::string& name : presets::RobotNames()) {
    const KinematicChain chain = presets::Robot(name);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd q = RandomConfig(chain.dof());
      const Matrix6Xd jac = GeometricJacobian(chain, q);
      for (int k = 0; k < chain.dof(); ++k) {
        const double err =
            (jac.col(k) - FiniteDifferenceColumn(chain, q, k)).cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
        REQUIRE_THAT(err <= 1e-5, name + ": finite-difference error " + std::to_string(err));
      }
    }
  }
  std::printf("      (max finite-difference error %.3g)\n", worst);

  const KinematicChain planar = presets::Robot("planar-2r");
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd q = RandomConfig(2);
    const double w = Manipulability(GeometricJacobian(planar, q), {0, 1});
    const double expected = std::abs(std::sin(q[1]));
    REQUIRE_THAT(std::abs(w - expected) <= 1e-9,
                 "planar manipulability off by " + std::to_string(w - expected));
  }
  return true;
}

// --- criterion 7: sweep reproduction -----------------------------------------

bool SweepReproduction() {
  const presets::ScenarioPreset preset = presets::Scenario("baxter-like-7dof-sweep");
  const KinematicChain chain = presets::Robot(preset.robot);
  const SensorSuite suite = presets::Suite(preset.suite);

  const auto start = std::chrono::steady_clock::now();
  const SweepSeries series = Sweep(chain, suite, preset.trajectory);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  REQUIRE_THAT(series.samples.size() == 1201, "expected 1201 samples at 100 Hz");

  const double singular_time = 4.0;
  struct Series {
    const char* name;
    const std::vector<double>& norm;
  };
  const Series all[] = {{"wk", series.wk_norm},
                        {"o_sum", series.o_sum_norm},
                        {"o_max", series.o_max_norm}};
  for (const Series& s : all) {
    std::size_t argmin = 0;
    for (std::size_t i = 0; i < s.norm.size(); ++i) {
      if (s.norm[i] < s.norm[argmin]) argmin = i;
    }
    const double t_min = series.samples[argmin].t;
    REQUIRE_THAT(std::abs(t_min - singular_time) <= 0.1,
                 std::string(s.name) + " minimum at t = " + std::to_string(t_min));
    REQUIRE_THAT(s.norm[argmin] < 0.02,
                 std::string(s.name) + " minimum " + std::to_string(s.norm[argmin]));
  }

  double o_max_norm_peak = 0.0;
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    REQUIRE_THAT(series.samples[i].o_max <= 1.0 + 1e-12,
                 "raw o_max exceeds 1 at t = " + std::to_string(series.samples[i].t));
    o_max_norm_peak = std::max(o_max_norm_peak, series.o_max_norm[i]);
  }
  REQUIRE_THAT(o_max_norm_peak == 1.0, "normalized o_max never reaches 1");

  std::printf("      (runtime %.3f s, raw o_max peak %.6f)\n", seconds, series.o_max_max);
  REQUIRE_THAT(seconds < 5.0, "runtime " + std::to_string(seconds) + " s >= 5 s");
  return true;
}

// --- criterion 8: gamma_max semantics ----------------------------------------

bool GammaMaxDirectObservation() {
  // Six perfectly aligned axes at the task frame: every row peaks at 1.
  const KinematicChain planar = presets::Robot("planar-2r");
  const ObservabilityMatrix om = BuildObservabilityMatrix(
      planar, Eigen::VectorXd::Zero(2), EndEffectorSixAxisSuite(planar));
  const Vector6d s = GammaMax(om);
  for (int j = 0; j < 6; ++j) {
    REQUIRE_THAT(s[j] == 1.0, "s[" + std::to_string(j) + "] != 1 exactly");
  }

  // Torque axis collinear with its moment arm: direct observation through
  // the force transform's collinear branch.
  const KinematicChain lift("lift",
                            {{JointKind::kRevolute, 0.0, 0.0, 1.0, 0.0, "j1"}});
  const ObservabilityMatrix tau =
      BuildObservabilityMatrix(lift, Eigen::VectorXd::Zero(1),
                               CanonicalTorqueSuite(lift));
  REQUIRE_THAT(GammaMax(tau)[5] == 1.0, "collinear torque axis not exactly 1");
  return true;
}

// --- criterion 9: CLI determinism and preset round-trip ----------------------

std::string ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool CliDeterminism(const std::string& cli) {
  namespace fs = std::filesystem;
  REQUIRE_THAT(!cli.empty(), "CLI binary path not supplied (argv[1])");
  REQUIRE_THAT(fs::exists(cli), "CLI binary not found at " + cli);

  const fs::path dir =
      fs::temp_directory_path() / ("sensobs-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const auto shell = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };

  const fs::path csv_a = dir / "sweep-a.csv";
  const fs::path csv_b = dir / "sweep-b.csv";
  REQUIRE_THAT(shell("sweep --scenario baxter-like-7dof-sweep --out " + csv_a.string()) == 0,
               "sweep invocation failed");
  REQUIRE_THAT(shell("sweep --scenario baxter-like-7dof-sweep --out " + csv_b.string()) == 0,
               "second sweep invocation failed");
  const std::string a = ReadAll(csv_a);
  REQUIRE_THAT(!a.empty(), "sweep CSV is empty");
  REQUIRE_THAT(a == ReadAll(csv_b), "sweep CSV is not byte-identical across runs");

  const fs::path rep_a = dir / "analyze-a.json";
  const fs::path rep_b = dir / "analyze-b.json";
  const std::string analyze_args =
      "analyze --robot planar-2r --sensors planar-2r-torque --q 0,0 "
      "--gamma sum --threshold 1e-9 --format json --out ";
  REQUIRE_THAT(shell(analyze_args + rep_a.string()) == 0, "analyze invocation failed");
  REQUIRE_THAT(shell(analyze_args + rep_b.string()) == 0, "analyze invocation failed");
  REQUIRE_THAT(ReadAll(rep_a) == ReadAll(rep_b), "analyze output differs across runs");

  // Preset files reload losslessly.
  const fs::path preset_dir = dir / "presets";
  REQUIRE_THAT(shell("presets --out " + preset_dir.string()) == 0, "presets write failed");
  for (const std::string& name : presets::RobotNames()) {
    const KinematicChain original = presets::Robot(name);
    const KinematicChain reloaded =
        LoadRobot((preset_dir / (name + ".robot.json")).string());
    REQUIRE_THAT(reloaded.name() == original.name(), name + ": name changed");
    REQUIRE_THAT(reloaded.dof() == original.dof(), name + ": dof changed");
    for (int k = 0; k < original.dof(); ++k) {
      const JointSpec &x = original.joint(k), &y = reloaded.joint(k);
      REQUIRE_THAT(x.a == y.a && x.alpha == y.alpha && x.d == y.d &&
                       x.theta_offset == y.theta_offset && x.kind == y.kind &&
                       x.name == y.name,
                   name + ": joint " + std::to_string(k + 1) + " not identical");
    }
  }
  for (const std::string& name : presets::SuiteNames()) {
    const SensorSuite original = presets::Suite(name);
    const SensorSuite reloaded =
        LoadSuite((preset_dir / (name + ".sensors.json")).string());
    REQUIRE_THAT(reloaded.size() == original.size(), name + ": size changed");
    for (int i = 0; i < original.size(); ++i) {
      REQUIRE_THAT(original.axes[i].local_axis == reloaded.axes[i].local_axis &&
                       original.axes[i].parent_joint == reloaded.axes[i].parent_joint &&
                       original.axes[i].transform == reloaded.axes[i].transform &&
                       original.axes[i].offset.translation ==
                           reloaded.axes[i].offset.translation,
                   name + ": axis " + std::to_string(i) + " not identical");
      REQUIRE_THAT((original.axes[i].offset.rotation - reloaded.axes[i].offset.rotation)
                           .cwiseAbs()
                           .maxCoeff() <= 1e-14,
                   name + ": axis " + std::to_string(i) + " rotation drifted");
    }
  }
  const Scenario scenario =
      LoadScenario((preset_dir / "baxter-like-7dof-sweep.scenario.json").string());
  const presets::ScenarioPreset preset = presets::Scenario("baxter-like-7dof-sweep");
  REQUIRE_THAT(scenario.trajectory.sample_rate == preset.trajectory.sample_rate,
               "scenario sample rate changed");
  REQUIRE_THAT(scenario.trajectory.waypoints.size() == preset.trajectory.waypoints.size(),
               "scenario waypoint count changed");
  for (std::size_t i = 0; i < preset.trajectory.waypoints.size(); ++i) {
    REQUIRE_THAT(scenario.trajectory.waypoints[i].t == preset.trajectory.waypoints[i].t &&
                     scenario.trajectory.waypoints[i].q == preset.trajectory.waypoints[i].q,
                 "scenario waypoint " + std::to_string(i) + " not identical");
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  Run(1, "special-case equivalence on the revolute presets",
      SpecialCaseEquivalence);
  Run(2, "extended planar 2R loses x-forces exactly", ExtendedPlanarSingularity);
  Run(3, "kinematic-only and false observability singularities",
      SingularityTypeIndependence);
  Run(4, "force transform invariant to the moment-arm magnitude",
      MomentArmInvariance);
  Run(5, "index vanishes exactly when a matrix row vanishes", RowZeroEquivalence);
  Run(6, "Jacobian matches finite differences; planar manipulability closed form",
      JacobianCorrectness);
  Run(7, "bundled sweep dips at the singular waypoint", SweepReproduction);
  Run(8, "gamma_max reports direct observation as exactly 1",
      GammaMaxDirectObservation);
  Run(9, "CLI determinism and preset round-trip",
      [&] { return CliDeterminism(cli); });

  if (g_failures > 0) {
    std::printf("%d of 9 criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
