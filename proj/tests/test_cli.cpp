#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "circlepat/cli.hpp"
#include "circlepat/io.hpp"
#include "json.hpp"

using namespace circlepat;
namespace fs = std::filesystem;

namespace {

const fs::path kData = CIRCLEPAT_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

// Number following `key` in a text report.
double value_after(const std::string& text, const std::string& key) {
  const auto at = text.find(key);
  REQUIRE(at != std::string::npos);
  return std::stod(text.substr(at + key.size()));
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "circlepat_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("validate") {
  const auto r = run({"validate", data("torus_2x2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("valid: 4 faces, 8 edges, 4 vertices, euclidean") != std::string::npos);
  CHECK(r.out.find("vertex v_0_0: cone angle 6.28318") != std::string::npos);
  const auto loops = run({"validate", data("genus2_octagon_hyp.json")});
  CHECK(loops.code == kExitOk);
  CHECK(loops.out.find("note: nonstandard") != std::string::npos);
}

TEST_CASE("check: feasible and infeasible fixtures") {
  auto r = run({"check", data("torus_2x2_hyp.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("status: feasible") != std::string::npos);
  CHECK(value_after(r.out, "\nmargin: ") == doctest::Approx(0.2).epsilon(1e-12));

  r = run({"check", data("torus_2x2_phi2pi_hyp.json")});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.out.find("status: infeasible") != std::string::npos);
  CHECK(r.out.find("certificate: subset {f_0_0, f_0_1, f_1_0, f_1_1}") != std::string::npos);

  r = run({"check", data("torus_2x2_phi2pi_hyp.json"), "--json"});
  CHECK(r.code == kExitInfeasible);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "infeasible");
  CHECK(doc["certificate"]["faces"].size() == 4);

  r = run({"check", data("torus_2x2_hyp.json"), "--tol", "0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("status: boundary_feasible") != std::string::npos);
}

TEST_CASE("solve: flat torus json") {
  const auto r = run({"solve", data("torus_2x2.json"), "--json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& [id, radius] : doc["radii"].items()) CHECK(radius.get<double>() == doctest::Approx(0.25));
  CHECK(doc["feasibility"]["status"] == "feasible");
}

TEST_CASE("solve: options") {
  auto r = run({"solve", data("torus_2x2_hyp.json"), "--method", "iterative", "--tol", "1e-12"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("method: iterative") != std::string::npos);
  CHECK(r.out.find("kkt_ok: true") != std::string::npos);

  r = run({"solve", data("genus2_fan_euc.json"), "--gauge", "face:t0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("radius t0 1\n") != std::string::npos);

  r = run({"solve", data("genus2_fan_euc.json"), "--gauge", "face:zz"});
  CHECK(r.code == kExitInputError);
  r = run({"solve", data("genus2_fan_euc.json"), "--gauge", "mean"});
  CHECK(r.code == kExitInputError);
  r = run({"solve", data("torus_2x2.json"), "--method", "magic"});
  CHECK(r.code == kExitInputError);
}

TEST_CASE("solve: refusal and numerical failure") {
  auto r = run({"solve", data("torus_2x2_phi2pi_hyp.json")});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.err.find("solve refused") != std::string::npos);

  r = run({"solve", data("torus_3x3_hyp.json"), "--method", "iterative", "--max-iter", "1", "--tol", "1e-14"});
  CHECK(r.code == kExitNumericalFailure);
  CHECK(r.err.find("numerical failure") != std::string::npos);
  CHECK(r.err.find("last residual") != std::string::npos);
}

TEST_CASE("solve --out then export") {
  const fs::path report = scratch("report.json");
  const fs::path svg1 = scratch("a.svg");
  const fs::path svg2 = scratch("b.svg");
  const fs::path layout = scratch("layout.json");
  auto r = run({"solve", data("genus2_fan_hyp.json"), "--out", report.string()});
  REQUIRE(r.code == kExitOk);
  REQUIRE(fs::exists(report));
  r = run({"export", data("genus2_fan_hyp.json"), "--solution", report.string(), "--svg", svg1.string(), "--layout",
           layout.string()});
  CHECK(r.code == kExitOk);
  r = run({"export", data("genus2_fan_hyp.json"), "--solution", report.string(), "--svg", svg2.string()});
  CHECK(r.code == kExitOk);
  const std::string a = io::read_text_file(svg1);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a == io::read_text_file(svg2));
  CHECK(nlohmann::json::parse(io::read_text_file(layout))["faces"].size() == 8);

  // A report for another instance does not fit.
  r = run({"export", data("torus_2x2.json"), "--solution", report.string(), "--svg", svg2.string()});
  CHECK(r.code == kExitInputError);
  io::write_text_file(report, "{ not json");
  r = run({"export", data("genus2_fan_hyp.json"), "--solution", report.string(), "--svg", svg2.string()});
  CHECK(r.code == kExitInputError);
  fs::remove_all(report.parent_path());
}

TEST_CASE("oracle") {
  auto r = run({"oracle", data("torus_2x2_hyp.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("status: feasible") != std::string::npos);
  CHECK(value_after(r.out, "minimum: {f_0_0, f_0_1, f_1_0, f_1_1} slack ") == doctest::Approx(0.2).epsilon(1e-12));
  r = run({"oracle", data("torus_2x2_phi2pi_hyp.json")});
  CHECK(r.code == kExitInfeasible);
  r = run({"oracle", data("torus_2x2.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("total: slack") != std::string::npos);
}

TEST_CASE("input errors") {
  for (const auto* bad : {"invalid/bad_D.json", "invalid/missing_face.json", "invalid/duplicate_face.json",
                          "invalid/malformed.json", "nope.json"}) {
    CAPTURE(bad);
    for (const auto* cmd : {"validate", "check", "solve", "oracle"}) {
      const auto r = run({cmd, data(bad)});
      CHECK(r.code == kExitInputError);
      CHECK(r.err.rfind("error: ", 0) == 0);
    }
  }
  const auto d = run({"check", data("invalid/bad_D.json")});
  CHECK(d.err.find("/edges/3/D") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"check"}).code == kExitInputError);
  CHECK(run({"check", data("torus_2x2.json"), "--tol", "-1"}).code == kExitInputError);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("solve") != std::string::npos);
  CHECK(run({"solve", "--help"}).out.find("--gauge") != std::string::npos);
}
