// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optheory/linalg.hpp"

namespace optheory {

/// Row covector on effect coordinates; pairing with a state is ā·s.
struct EffectVector {
  RowVector coords;

  EffectVector() = default;
  explicit EffectVector(RowVector c) : coords(std::move(c)) {}
  int dim() const { return static_cast<int>(coords.size()); }
};

/// Column vector on effect coordinates; a normalized state satisfies e·s = 1.
struct StateVector {
  Vector coords;

  StateVector() = default;
  explicit StateVector(Vector c) : coords(std::move(c)) {}
  int dim() const { return static_cast<int>(coords.size()); }
};

/// A (generalized) transformation, stored as its right-action matrix on effect
/// coordinates. Conventions used throughout:
///   effects chain from the right:  b∘A = b·R_A          (rows)
///   states evolve from the left:   s   ↦ R_A·s          (columns)
///   composition (B occurs first):  R_{A∘B} = R_A·R_B
struct TransformationMatrix {
  std::string name;
  Matrix right_action;

  TransformationMatrix() = default;
  TransformationMatrix(std::string n, Matrix r)
      : name(std::move(n)), right_action(std::move(r)) {}
  int dim() const { return static_cast<int>(right_action.rows()); }
};

/// Outcome set of one experiment; the effects of its members must sum to the
/// unit effect.
struct Experiment {
  std::string name;
  std::vector<TransformationMatrix> members;
};

enum class ConeKind {
  ClassicalSubstochastic,  // nonnegative entries, column sums ≤ 1
  QuantumChoi,             // Choi matrix positive semidefinite
  Hull,                    // nonnegative combinations of the declared generators
};

struct ConeSpec {
  ConeKind kind = ConeKind::Hull;
  int hilbert_dim = 0;  // QuantumChoi only; effect dimension is hilbert_dim²
};

struct NamedState {
  std::string name;
  StateVector state;
};

/// A finite-dimensional operational theory: effect space, unit effect,
/// generating physical transformations, declared extremal states and the
/// physicality cone. An optional symmetric bipartite form (the faithful
/// state) feeds the transposition/GNS pipeline.
struct Theory {
  std::string name;
  int effect_dim = 0;
  EffectVector unit_effect;
  TransformationMatrix identity;
  std::vector<TransformationMatrix> transformations;
  std::vector<NamedState> extremal_states;
  std::optional<Matrix> faithful_form;
  ConeSpec cone;
  std::vector<Experiment> experiments;  // declared by built-in models; not serialized

  const TransformationMatrix* find_transformation(std::string_view name) const;
  /// Lookup that throws SchemaError when the name is unknown.
  const TransformationMatrix& transformation(std::string_view name) const;
};

std::string cone_kind_name(ConeKind kind);

}  // namespace optheory
