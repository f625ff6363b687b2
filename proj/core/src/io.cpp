// SPDX-License-Identifier: Apache-2.0
#include "optheory/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "optheory/errors.hpp"

namespace optheory {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require_key(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing key '" + key + "'");
  return *it;
}

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw SchemaError(where + ": unknown key '" + key + "'");
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<int>();
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": expected a number");
  return j.get<double>();
}

RowVector row_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of numbers");
  RowVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = require_number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw SchemaError(where + ": expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw SchemaError(where + ": expected non-empty rows");
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(where + ": row " + std::to_string(r) + " has inconsistent length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = require_number(
          row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Theory theory_from_json(const json& j) {
  reject_unknown(j,
                 {"name", "effect_dim", "unit_effect", "identity", "transformations",
                  "extremal_states", "faithful_state", "cone"},
                 "theory");
  Theory th;
  th.name = require_string(require_key(j, "name", "theory"), "theory.name");
  th.effect_dim = require_int(require_key(j, "effect_dim", "theory"), "theory.effect_dim");
  if (th.effect_dim <= 0) throw SchemaError("theory.effect_dim: must be positive");
  const int d = th.effect_dim;

  th.unit_effect = EffectVector(
      row_from_json(require_key(j, "unit_effect", "theory"), "theory.unit_effect"));
  if (th.unit_effect.dim() != d)
    throw SchemaError("theory.unit_effect: expected length " + std::to_string(d));

  th.identity = {"I", matrix_from_json(require_key(j, "identity", "theory"),
                                       "theory.identity")};
  if (th.identity.dim() != d || th.identity.right_action.cols() != d)
    throw SchemaError("theory.identity: expected a " + std::to_string(d) + "x" +
                      std::to_string(d) + " matrix");

  const json& trs = require_key(j, "transformations", "theory");
  if (!trs.is_array()) throw SchemaError("theory.transformations: expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < trs.size(); ++i) {
    const std::string where = "theory.transformations[" + std::to_string(i) + "]";
    reject_unknown(trs[i], {"name", "matrix"}, where);
    TransformationMatrix t{
        require_string(require_key(trs[i], "name", where), where + ".name"),
        matrix_from_json(require_key(trs[i], "matrix", where), where + ".matrix")};
    if (t.right_action.rows() != d || t.right_action.cols() != d)
      throw SchemaError(where + ".matrix: expected " + std::to_string(d) + "x" +
                        std::to_string(d));
    if (!seen.insert(t.name).second)
      throw SchemaError(where + ": duplicate transformation name '" + t.name + "'");
    th.transformations.push_back(std::move(t));
  }

  const json& sts = require_key(j, "extremal_states", "theory");
  if (!sts.is_array()) throw SchemaError("theory.extremal_states: expected an array");
  for (std::size_t i = 0; i < sts.size(); ++i) {
    const std::string where = "theory.extremal_states[" + std::to_string(i) + "]";
    reject_unknown(sts[i], {"name", "coords"}, where);
    NamedState s{require_string(require_key(sts[i], "name", where), where + ".name"),
                 StateVector(row_from_json(require_key(sts[i], "coords", where),
                                           where + ".coords")
                                 .transpose())};
    if (s.state.dim() != d)
      throw SchemaError(where + ".coords: expected length " + std::to_string(d));
    th.extremal_states.push_back(std::move(s));
  }

  if (j.contains("faithful_state")) {
    const json& fs = j["faithful_state"];
    reject_unknown(fs, {"matrix"}, "theory.faithful_state");
    Matrix f = matrix_from_json(require_key(fs, "matrix", "theory.faithful_state"),
                                "theory.faithful_state.matrix");
    if (f.rows() != d || f.cols() != d)
      throw SchemaError("theory.faithful_state.matrix: expected " + std::to_string(d) +
                        "x" + std::to_string(d));
    th.faithful_form = std::move(f);
  }

  const json& cone = require_key(j, "cone", "theory");
  reject_unknown(cone, {"kind", "hilbert_dim"}, "theory.cone");
  const std::string kind = require_string(require_key(cone, "kind", "theory.cone"),
                                          "theory.cone.kind");
  if (kind == "classical-substochastic") {
    th.cone.kind = ConeKind::ClassicalSubstochastic;
  } else if (kind == "quantum-choi") {
    th.cone.kind = ConeKind::QuantumChoi;
    th.cone.hilbert_dim =
        require_int(require_key(cone, "hilbert_dim", "theory.cone"), "theory.cone.hilbert_dim");
    if (th.cone.hilbert_dim * th.cone.hilbert_dim != d)
      throw SchemaError("theory.cone.hilbert_dim: effect_dim must equal hilbert_dim²");
  } else if (kind == "hull") {
    th.cone.kind = ConeKind::Hull;
  } else {
    throw SchemaError("theory.cone.kind: unknown kind '" + kind + "'");
  }
  return th;
}

ordered_json theory_to_json(const Theory& theory) {
  ordered_json j;
  j["name"] = theory.name;
  j["effect_dim"] = theory.effect_dim;
  ordered_json unit = ordered_json::array();
  for (Eigen::Index i = 0; i < theory.unit_effect.coords.size(); ++i)
    unit.push_back(theory.unit_effect.coords[i]);
  j["unit_effect"] = std::move(unit);
  j["identity"] = matrix_to_json(theory.identity.right_action);
  ordered_json trs = ordered_json::array();
  for (const auto& t : theory.transformations) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["matrix"] = matrix_to_json(t.right_action);
    trs.push_back(std::move(tj));
  }
  j["transformations"] = std::move(trs);
  ordered_json sts = ordered_json::array();
  for (const auto& s : theory.extremal_states) {
    ordered_json sj;
    sj["name"] = s.name;
    ordered_json coords = ordered_json::array();
    for (Eigen::Index i = 0; i < s.state.coords.size(); ++i)
      coords.push_back(s.state.coords[i]);
    sj["coords"] = std::move(coords);
    sts.push_back(std::move(sj));
  }
  j["extremal_states"] = std::move(sts);
  if (theory.faithful_form) {
    ordered_json fs;
    fs["matrix"] = matrix_to_json(*theory.faithful_form);
    j["faithful_state"] = std::move(fs);
  }
  ordered_json cone;
  cone["kind"] = cone_kind_name(theory.cone.kind);
  if (theory.cone.kind == ConeKind::QuantumChoi)
    cone["hilbert_dim"] = theory.cone.hilbert_dim;
  j["cone"] = std::move(cone);
  return j;
}

Theory load_theory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open theory file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON in '" + path.string() + "': " + e.what());
  }
  return theory_from_json(j);
}

void save_theory(const Theory& theory, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write theory file '" + path.string() + "'");
  out << theory_to_json(theory).dump(2) << "\n";
}

ordered_json matrix_fragment(const TransformationMatrix& t) {
  ordered_json j;
  j["name"] = t.name;
  j["matrix"] = matrix_to_json(t.right_action);
  return j;
}

void save_counts_csv(const CountsTable& counts, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write counts file '" + path.string() + "'");
  out << "i,j,count\n";
  for (int i = 0; i < counts.rows; ++i)
    for (int j = 0; j < counts.cols; ++j)
      out << i << "," << j << "," << counts.at(i, j) << "\n";
  out << "-1,-1," << counts.no_occurrence << "\n";
}

CountsTable load_counts_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open counts file '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != "i,j,count")
    throw SchemaError("counts file '" + path.string() + "': missing 'i,j,count' header");

  struct Cell {
    int i, j;
    std::int64_t count;
  };
  std::vector<Cell> cells;
  int max_i = -1, max_j = -1;
  std::int64_t rest = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Cell c{};
    char comma1 = 0, comma2 = 0;
    if (!(ss >> c.i >> comma1 >> c.j >> comma2 >> c.count) || comma1 != ',' ||
        comma2 != ',')
      throw SchemaError("counts file '" + path.string() + "': malformed line '" + line +
                        "'");
    if (c.i == -1 && c.j == -1) {
      rest = c.count;
      continue;
    }
    if (c.i < 0 || c.j < 0)
      throw SchemaError("counts file '" + path.string() + "': negative index");
    max_i = std::max(max_i, c.i);
    max_j = std::max(max_j, c.j);
    cells.push_back(c);
  }
  CountsTable table;
  table.rows = max_i + 1;
  table.cols = max_j + 1;
  table.counts.assign(static_cast<std::size_t>(table.rows) * table.cols, 0);
  for (const auto& c : cells) table.at(c.i, c.j) = c.count;
  table.no_occurrence = rest;
  table.total = rest;
  for (const auto& c : cells) table.total += c.count;
  return table;
}

}  // namespace optheory
