// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "optheory/io.hpp"
#include "optheory/models.hpp"
#include "optheory/theory.hpp"

using namespace optheory;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("theory json round trip is exact") {
  for (const auto& original : {build_classical(2), build_qubit()}) {
    const Theory back = theory_from_json(theory_to_json(original));
    CHECK(back.name == original.name);
    CHECK(back.effect_dim == original.effect_dim);
    CHECK((back.unit_effect.coords - original.unit_effect.coords)
              .cwiseAbs()
              .maxCoeff() == 0.0);
    REQUIRE(back.transformations.size() == original.transformations.size());
    for (std::size_t i = 0; i < back.transformations.size(); ++i) {
      CHECK(back.transformations[i].name == original.transformations[i].name);
      CHECK(max_abs(back.transformations[i].right_action -
                    original.transformations[i].right_action) == 0.0);
    }
    REQUIRE(back.faithful_form.has_value());
    CHECK(max_abs(*back.faithful_form - *original.faithful_form) == 0.0);
    CHECK(back.cone.kind == original.cone.kind);
  }
}

TEST_CASE("golden theory files load and match the builders") {
  const fs::path dir(OPTHEORY_DATA_DIR);
  {
    const Theory golden = load_theory(dir / "classical2.json");
    const Theory built = build_classical(2);
    CHECK(golden.name == built.name);
    CHECK(max_abs(golden.identity.right_action - built.identity.right_action) == 0.0);
    CHECK(max_abs(*golden.faithful_form - *built.faithful_form) == 0.0);
  }
  {
    const Theory golden = load_theory(dir / "qubit.json");
    const Theory built = build_qubit();
    REQUIRE(golden.transformations.size() == built.transformations.size());
    for (std::size_t i = 0; i < golden.transformations.size(); ++i)
      CHECK(max_abs(golden.transformations[i].right_action -
                    built.transformations[i].right_action) == 0.0);
    CHECK(validate_theory(golden).all_passed());
  }
}

TEST_CASE("schema diagnostics name the offending field") {
  nlohmann::json good = theory_to_json(build_classical(2));

  {
    nlohmann::json j = good;
    j.erase("unit_effect");
    CHECK_THROWS_WITH_AS(theory_from_json(j), "theory: missing key 'unit_effect'",
                         SchemaError);
  }
  {
    nlohmann::json j = good;
    j["extra"] = 1;
    CHECK_THROWS_WITH_AS(theory_from_json(j), "theory: unknown key 'extra'",
                         SchemaError);
  }
  {
    nlohmann::json j = good;
    j["effect_dim"] = "two";
    CHECK_THROWS_AS(theory_from_json(j), SchemaError);
  }
  {
    nlohmann::json j = good;
    j["identity"] = nlohmann::json::array({1, 2});
    CHECK_THROWS_AS(theory_from_json(j), SchemaError);
  }
  {
    nlohmann::json j = good;
    j["cone"]["kind"] = "simplex";
    CHECK_THROWS_AS(theory_from_json(j), SchemaError);
  }
  {
    nlohmann::json j = good;
    j["transformations"][0]["matrix"] = nlohmann::json::array(
        {nlohmann::json::array({1.0, 0.0}), nlohmann::json::array({0.0})});
    CHECK_THROWS_AS(theory_from_json(j), SchemaError);
  }
  {
    // quantum cone demands effect_dim = hilbert_dim²
    nlohmann::json j = good;
    j["cone"] = {{"kind", "quantum-choi"}, {"hilbert_dim", 3}};
    CHECK_THROWS_AS(theory_from_json(j), SchemaError);
  }
  {
    nlohmann::json j = good;
    j["transformations"][1]["name"] = "I";  // duplicate
    CHECK_THROWS_AS(theory_from_json(j), SchemaError);
  }
}

TEST_CASE("hull cone parses from json") {
  nlohmann::json j = theory_to_json(build_classical(2));
  j["cone"] = {{"kind", "hull"}};
  const Theory th = theory_from_json(j);
  CHECK(th.cone.kind == ConeKind::Hull);
  CHECK(validate_theory(th).all_passed());
}

TEST_CASE("theory files persist through disk") {
  const fs::path path = temp_file("optheory_roundtrip.json");
  save_theory(build_qubit(), path);
  const Theory back = load_theory(path);
  CHECK(back.name == "qubit");
  CHECK(back.cone.kind == ConeKind::QuantumChoi);
  fs::remove(path);

  CHECK_THROWS_AS(load_theory(temp_file("missing_theory.json")), SchemaError);
}

TEST_CASE("counts tables persist as csv") {
  CountsTable table;
  table.rows = 2;
  table.cols = 3;
  table.counts = {5, 0, 7, 1, 2, 3};
  table.no_occurrence = 4;
  table.total = 22;

  const fs::path path = temp_file("optheory_counts.csv");
  save_counts_csv(table, path);
  const CountsTable back = load_counts_csv(path);
  CHECK(back.rows == 2);
  CHECK(back.cols == 3);
  CHECK(back.counts == table.counts);
  CHECK(back.no_occurrence == 4);
  CHECK(back.total == 22);
  fs::remove(path);
}

TEST_CASE("counts csv rejects malformed rows") {
  const fs::path path = temp_file("optheory_bad_counts.csv");
  {
    std::ofstream out(path);
    out << "i,j,count\n0;0;5\n";
  }
  CHECK_THROWS_AS(load_counts_csv(path), SchemaError);
  fs::remove(path);
}

TEST_CASE("matrix fragment carries name and row-major entries") {
  const Theory cls = build_classical(2);
  const auto frag = matrix_fragment(cls.transformation("select_0"));
  CHECK(frag["name"] == "select_0");
  CHECK(frag["matrix"][0][0] == 1.0);
  CHECK(frag["matrix"][1][1] == 0.0);
}

}  // TEST_SUITE
