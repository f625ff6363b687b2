// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "json.hpp"
#include "optheory/calibration.hpp"
#include "optheory/types.hpp"

namespace optheory {

/// Theory file schema (strict: unknown keys and malformed values raise
/// SchemaError with a field diagnostic):
///   {"name": str, "effect_dim": int, "unit_effect": [num], "identity": [[num]],
///    "transformations": [{"name": str, "matrix": [[num]]}],
///    "extremal_states": [{"name": str, "coords": [num]}],
///    "faithful_state": {"matrix": [[num]]},
///    "cone": {"kind": "classical-substochastic"|"quantum-choi"|"hull",
///             "hilbert_dim": int?}}
/// Matrices are row-major; the row index is the input effect coordinate under
/// right action.
Theory theory_from_json(const nlohmann::json& j);
nlohmann::ordered_json theory_to_json(const Theory& theory);

Theory load_theory(const std::filesystem::path& path);
void save_theory(const Theory& theory, const std::filesystem::path& path);

nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& where);

/// {"name": ..., "matrix": [[...]]} — the theory-file fragment for one
/// transformation (used to persist calibration estimates).
nlohmann::ordered_json matrix_fragment(const TransformationMatrix& t);

/// Counts CSV: header "i,j,count"; the no-occurrence outcome is stored with
/// i = j = -1.
void save_counts_csv(const CountsTable& counts, const std::filesystem::path& path);
CountsTable load_counts_csv(const std::filesystem::path& path);

}  // namespace optheory
