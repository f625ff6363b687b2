// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "optheory/cli.hpp"

using namespace optheory;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_timings(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  j.erase("timings");
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate on built-in models exits zero") {
  CHECK(run({"validate", "--model", "qubit"}).exit_code == 0);
  CHECK(run({"validate", "--model", "classical2"}).exit_code == 0);
}

TEST_CASE("every analysis command runs green on the qubit model") {
  for (const char* cmd : {"faithful", "gns", "cstar", "born"}) {
    const CliResult r = run({cmd, "--model", "qubit", "--format", "json"});
    CAPTURE(cmd);
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["passed"] == true);
  }
}

TEST_CASE("transpose reports the transposed matrix") {
  const CliResult r = run({"transpose", "--model", "qubit", "--transformation", "ry90",
                           "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["transformation"] == "ry90");
  CHECK(j["transposed"]["matrix"].size() == 4);

  // a classical reset transposes to a generalized (nonphysical) map, reported
  // informationally without failing the run
  const CliResult cls = run({"transpose", "--model", "classical2", "--transformation",
                             "reset_0", "--format", "json"});
  CHECK(cls.exit_code == 0);
  const nlohmann::json cj = nlohmann::json::parse(cls.out);
  bool found = false;
  for (const auto& c : cj["checks"])
    if (c["name"] == "transposed-physicality") {
      found = true;
      CHECK(c["verdict"] == "informational");
      CHECK(c["residual"].get<double>() > 0.1);
    }
  CHECK(found);
}

TEST_CASE("gns report carries the classical form spectrum") {
  const CliResult r = run({"gns", "--model", "classical2", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("form_eigenvalues"));
  CHECK(j["form_eigenvalues"].size() == 2);
  CHECK(j["form_eigenvalues"][0] == 0.5);
  CHECK(j["form_eigenvalues"][1] == 0.5);
  CHECK(j["dim_h"] == 2);
}

TEST_CASE("informational checks are always present in the gns report") {
  for (const char* model : {"qubit", "classical2"}) {
    const CliResult r = run({"gns", "--model", model, "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    bool quotient = false, representative = false;
    for (const auto& c : j["checks"]) {
      if (c["name"] == "quotient-dimension") {
        quotient = true;
        CHECK(c["verdict"] == "informational");
      }
      if (c["name"] == "representative-independence") {
        representative = true;
        CHECK(c["verdict"] == "informational");
        CHECK(c["residual"].get<double>() > 0.0);  // measured violation
      }
    }
    CHECK(quotient);
    CHECK(representative);
  }
}

TEST_CASE("malformed input exits with code two and a diagnostic") {
  const fs::path bad = fs::temp_directory_path() / "optheory_bad.json";
  {
    std::ofstream f(bad);
    f << "{\"name\": \"x\"";
  }
  const CliResult r = run({"validate", "--theory", bad.string()});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("invalid JSON") != std::string::npos);
  fs::remove(bad);

  CHECK(run({"validate"}).exit_code == 2);
  CHECK(run({"validate", "--model", "nosuch"}).exit_code == 2);
  CHECK(run({"transpose", "--model", "qubit", "--transformation", "nosuch"}).exit_code ==
        2);
  CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("check failures exit with code one") {
  // a valid schema whose identity is not neutral
  const fs::path path = fs::temp_directory_path() / "optheory_broken.json";
  {
    std::ofstream f(path);
    f << R"({"name":"broken","effect_dim":2,"unit_effect":[1.0,1.0],
             "identity":[[2.0,0.0],[0.0,2.0]],
             "transformations":[{"name":"I","matrix":[[2.0,0.0],[0.0,2.0]]}],
             "extremal_states":[{"name":"p0","coords":[1.0,0.0]}],
             "cone":{"kind":"classical-substochastic"}})";
  }
  const CliResult r = run({"validate", "--theory", path.string()});
  CHECK(r.exit_code == 1);
  fs::remove(path);
}

TEST_CASE("reports are byte-identical across runs once timings are removed") {
  for (const char* cmd : {"gns", "cstar", "born", "validate"}) {
    const CliResult a =
        run({cmd, "--model", "qubit", "--format", "json", "--seed", "9"});
    const CliResult b =
        run({cmd, "--model", "qubit", "--format", "json", "--seed", "9"});
    CAPTURE(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timings(a.out).dump() == strip_timings(b.out).dump());
  }
}

TEST_CASE("born uses --trials rather than --samples") {
  const CliResult r =
      run({"born", "--model", "qubit", "--trials", "5", "--format", "json"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("calibrate writes counts and estimate artifacts") {
  const fs::path counts = fs::temp_directory_path() / "optheory_counts_cli.csv";
  const fs::path estimate = fs::temp_directory_path() / "optheory_estimate_cli.json";
  const CliResult r = run({"calibrate", "--model", "qubit", "--transformation", "rx90",
                           "--shots", "20000", "--seed", "5", "--counts-out",
                           counts.string(), "--estimate-out", estimate.string(),
                           "--format", "json"});
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(counts));
  CHECK(fs::exists(estimate));
  {
    std::ifstream f(counts);
    std::string header;
    std::getline(f, header);
    CHECK(header == "i,j,count");
  }
  {
    std::ifstream f(estimate);
    const nlohmann::json j = nlohmann::json::parse(f);
    CHECK(j.contains("matrix"));
  }
  fs::remove(counts);
  fs::remove(estimate);
}

TEST_CASE("noiseless calibrate reports an exact round trip") {
  const CliResult r = run({"calibrate", "--model", "classical2", "--transformation",
                           "cycle", "--shots", "0", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "calibration-roundtrip") {
      found = true;
      CHECK(c["verdict"] == "pass");
      CHECK(c["residual"].get<double>() <= 1e-10);
    }
  CHECK(found);
}

TEST_CASE("export-theory round trips through validate") {
  const fs::path path = fs::temp_directory_path() / "optheory_export.json";
  CHECK(run({"export-theory", "classical3", "--out", path.string()}).exit_code == 0);
  CHECK(run({"validate", "--theory", path.string()}).exit_code == 0);
  fs::remove(path);
}

TEST_CASE("report to a file leaves stdout empty") {
  const fs::path path = fs::temp_directory_path() / "optheory_report.json";
  const CliResult r = run({"validate", "--model", "classical2", "--format", "json",
                           "--out", path.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(path));
  fs::remove(path);
}

}  // TEST_SUITE
