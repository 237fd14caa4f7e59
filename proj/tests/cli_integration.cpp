// End-to-end checks of the command-line tool: report contents for known
// configurations, exit codes, and the sweep CSV. Takes the CLI binary path
// as argv[1] and shells out to it like a user would.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

int g_failures = 0;
std::string g_cli;
fs::path g_dir;

#define EXPECT(cond, what)                                            \
  do {                                                                \
    if (!(cond)) {                                                    \
      std::printf("FAILED %s:%d: %s\n", __FILE__, __LINE__, (what)); \
      ++g_failures;                                                   \
    }                                                                 \
  } while (0)

int Shell(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = g_cli + " " + args;
  cmd += stdout_file.empty() ? " > /dev/null" : " > " + stdout_file;
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json RunJson(const std::string& args) {
  const fs::path out = g_dir / "out.json";
  const int code = Shell(args + " --format json --out " + out.string());
  EXPECT(code == 0, ("nonzero exit from: " + args).c_str());
  return json::parse(ReadAll(out), nullptr, false);
}

void AnalyzeReportsLostAxis() {
  const json doc = RunJson(
      "analyze --robot planar-2r --sensors planar-2r-torque --q 0,0 "
      "--gamma sum --threshold 1e-9");
  EXPECT(doc["s"][0] == 0.0, "s_fx should be exactly zero");
  EXPECT(doc["o"] == 0.0, "o should be exactly zero");
  EXPECT(doc["per_axis_flags"][0] == true, "fx should be flagged");
  EXPECT(doc["per_axis_flags"][1] == false, "fy should not be flagged");
  EXPECT(doc["ellipsoid_force"][1] == 2.0, "fy semi-axis should be 2");
}

void ClassifyCleanPose() {
  const json doc = RunJson(
      "classify --robot baxter-like-7dof --sensors baxter-like-7dof-ee-ft "
      "--q 0.4,-0.9,0.25,1.1,-0.5,0.6,0 --gamma max");
  EXPECT(doc["kinematic_singular"] == false, "kinematic_singular");
  EXPECT(doc["observability_singular"] == false, "observability_singular");
  EXPECT(doc["jt_nullspace_dim"] == 0, "jt_nullspace_dim");
  EXPECT(doc["false_observability_singularity"] == false, "false singularity");
}

void SpecialCaseExcludesWristColumn() {
  const json doc = RunJson(
      "special-case --robot baxter-like-7dof --q 0.4,-0.9,0.25,1.1,-0.5,0.6,0");
  EXPECT(doc["excluded_count"] == 1, "one excluded column");
  EXPECT(doc["columns"][6]["excluded"] == true, "wrist column excluded");
  EXPECT(doc["max_deviation"].get<double>() <= 1e-12, "max deviation");
}

void SweepCsvDipsAtSingularWaypoint() {
  const fs::path out = g_dir / "sweep.csv";
  EXPECT(Shell("sweep --scenario baxter-like-7dof-sweep --out " + out.string()) == 0,
         "sweep exit code");

  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT(line == "t,q1,q2,q3,q4,q5,q6,q7,wk,o_sum,o_max,wk_norm,o_sum_norm,o_max_norm",
         "csv header");

  double min_o_max = 1e300, t_at_min = -1.0;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> fields;
    while (std::getline(ss, cell, ',')) fields.push_back(std::stod(cell));
    EXPECT(fields.size() == 14, "csv column count");
    if (fields[10] < min_o_max) {
      min_o_max = fields[10];
      t_at_min = fields[0];
    }
  }
  EXPECT(rows == 1201, "sample count at 100 Hz");
  EXPECT(t_at_min == 4.0, "o_max minimum at the singular waypoint");

  // Rate override via the flag.
  EXPECT(Shell("sweep --scenario baxter-like-7dof-sweep --sample-rate 50 --out " +
               out.string()) == 0,
         "sweep with --sample-rate");
  std::ifstream in2(out);
  int rows2 = -1;  // minus the header
  while (std::getline(in2, line)) ++rows2;
  EXPECT(rows2 == 601, "sample count at 50 Hz");

  // Display scaling touches only the wk_norm column, monotonically.
  const fs::path scaled_path = g_dir / "sweep-scaled.csv";
  EXPECT(Shell("sweep --scenario baxter-like-7dof-sweep --sample-rate 50 "
               "--wk-scale 8 --out " + scaled_path.string()) == 0,
         "sweep with --wk-scale");
  std::ifstream plain_in(out), scaled_in(scaled_path);
  std::string plain_line, scaled_line;
  std::getline(plain_in, plain_line);
  std::getline(scaled_in, scaled_line);
  EXPECT(plain_line == scaled_line, "scaled csv keeps the header");
  while (std::getline(plain_in, plain_line) && std::getline(scaled_in, scaled_line)) {
    std::stringstream a(plain_line), b(scaled_line);
    std::vector<double> fa, fb;
    std::string cell;
    while (std::getline(a, cell, ',')) fa.push_back(std::stod(cell));
    while (std::getline(b, cell, ',')) fb.push_back(std::stod(cell));
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (i == 11) {
        EXPECT(fb[i] >= fa[i] - 1e-12, "scaling should not shrink wk_norm");
      } else {
        EXPECT(fa[i] == fb[i], "non-wk_norm columns must be untouched");
      }
    }
  }
}

void PresetFilesFeedBackIntoCommands() {
  const fs::path dir = g_dir / "presets";
  EXPECT(Shell("presets --out " + dir.string()) == 0, "presets --out");
  const json doc = RunJson(
      "analyze --robot " + (dir / "planar-2r.robot.json").string() +
      " --sensors " + (dir / "planar-2r-torque.sensors.json").string() +
      " --q 0,0 --gamma max");
  EXPECT(doc["o"] == 0.0, "analyze from written preset files");
  EXPECT(Shell("sweep --scenario " +
               (dir / "baxter-like-7dof-sweep.scenario.json").string()) == 0,
         "sweep from a written scenario file");
}

void ExitCodes() {
  // input errors
  EXPECT(Shell("analyze --robot planar-2r --sensors planar-2r-torque --q 0,0,0") == 1,
         "dimension mismatch should exit 1");
  EXPECT(Shell("analyze --robot no-such-file.json --sensors planar-2r-torque --q 0,0") == 1,
         "missing file should exit 1");
  EXPECT(Shell("analyze --robot planar-2r --sensors planar-2r-torque --q 0,zebra") == 1,
         "malformed --q should exit 1");

  // unsupported chain
  const fs::path robot = g_dir / "rp.robot.json";
  std::ofstream out(robot);
  out << R"({"name": "rp",
             "base_frame": {"rpy": [0,0,0], "xyz": [0,0,0]},
             "ee_offset": {"rpy": [0,0,0], "xyz": [0,0,0]},
             "joints": [
               {"name": "j1", "kind": "revolute", "a": 0.5, "alpha": 0, "d": 0, "theta_offset": 0},
               {"name": "j2", "kind": "prismatic", "a": 0, "alpha": 0, "d": 0.1, "theta_offset": 0}]})";
  out.close();
  EXPECT(Shell("special-case --robot " + robot.string() + " --q 0.1,0.2") == 2,
         "prismatic chain should exit 2");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli_integration <path-to-sensobs-cli>\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / ("sensobs-cli-test-" + std::to_string(::getpid()));
  fs::create_directories(g_dir);

  AnalyzeReportsLostAxis();
  ClassifyCleanPose();
  SpecialCaseExcludesWristColumn();
  SweepCsvDipsAtSingularWaypoint();
  PresetFilesFeedBackIntoCommands();
  ExitCodes();

  std::error_code ec;
  fs::remove_all(g_dir, ec);

  if (g_failures > 0) {
    std::printf("%d CLI checks failed\n", g_failures);
    return 1;
  }
  std::printf("all CLI checks passed\n");
  return 0;
}
