// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "optheory/cone.hpp"
#include "optheory/gns.hpp"
#include "optheory/models.hpp"
#include "optheory/theory.hpp"

using namespace optheory;

namespace {

CMatrix pauli_matrix(int axis) {
  CMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (axis) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("ptm of the identity Kraus set is the identity matrix") {
  KrausSet id{{CMatrix::Identity(2, 2)}};
  CHECK(max_abs(ptm_from_kraus(id, "I").right_action - Matrix::Identity(4, 4)) <
        1e-15);
}

TEST_CASE("ptm of the sigma-x unitary flips y and z") {
  KrausSet x{{pauli_matrix(1)}};
  Matrix expected = Matrix::Identity(4, 4);
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs(ptm_from_kraus(x, "x").right_action - expected) < 1e-15);
}

TEST_CASE("projector branch has the projector effect") {
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const TransformationMatrix branch = ptm_from_kraus({{p0}}, "p0");
  const Theory qubit = build_qubit();
  RowVector expected(4);
  expected << 1, 0, 0, 1;
  CHECK((effect_of(branch, qubit).coords - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("trace-increasing Kraus sets are rejected") {
  KrausSet bad{{std::sqrt(2.0) * CMatrix::Identity(2, 2)}};
  CHECK_THROWS_AS(ptm_from_kraus(bad, "bad"), ConeError);
}

TEST_CASE("ptm is additive over Kraus mixtures") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    KrausSet a = random_kraus(2, rng, 1);
    KrausSet b = random_kraus(2, rng, 1);
    // scale down so the union stays trace non-increasing
    for (auto& k : a.ops) k *= std::sqrt(0.5);
    for (auto& k : b.ops) k *= std::sqrt(0.5);
    KrausSet both;
    both.ops = a.ops;
    both.ops.insert(both.ops.end(), b.ops.begin(), b.ops.end());
    const Matrix sum = ptm_from_kraus(a, "a").right_action +
                       ptm_from_kraus(b, "b").right_action;
    CHECK(max_abs(ptm_from_kraus(both, "ab").right_action - sum) < 1e-13);
  }
}

TEST_CASE("built-in classical theories validate for several sizes") {
  for (int n : {1, 2, 3, 5}) {
    const Theory th = build_classical(n);
    CHECK(validate_theory(th).all_passed());
    CHECK(faithful_form(th).rank(1e-9) == n);
  }
}

TEST_CASE("degenerate one-point theory is consistent") {
  const Theory th = build_classical(1);
  CHECK(th.effect_dim == 1);
  CHECK(validate_theory(th).all_passed());
  const SignInvolution s = sign_involution(faithful_form(th));
  CHECK(s.s(0, 0) == 1.0);
}

TEST_CASE("qubit Bell form properties") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  CHECK(bell.symmetry_defect() == 0.0);
  CHECK(bell.rank(1e-9) == 4);
  CHECK(std::abs(bell.value(qubit.unit_effect, qubit.unit_effect) - 1.0) < 1e-15);

  // oracle: F_{μν} = Tr[(σ_μ⊗σ_ν)|Φ⁺⟩⟨Φ⁺|]/4 from the density matrix
  CVector phi = CVector::Zero(4);
  phi[0] = phi[3] = 1.0 / std::sqrt(2.0);
  const CMatrix rho = phi * phi.adjoint();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double oracle =
          (rho * kron(pauli_matrix(mu), pauli_matrix(nu))).trace().real() / 4.0;
      CHECK(std::abs(bell.matrix()(mu, nu) - oracle) < 1e-15);
    }
}

TEST_CASE("bell-form transposition matches the transposed unitary") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  SplitMix64 rng(29);
  for (int k = 0; k < 20; ++k) {
    const CMatrix u = random_unitary(2, rng);
    const TransformationMatrix channel = ptm_from_kraus({{u}}, "u");
    const TransformationMatrix channel_t =
        ptm_from_kraus({{u.transpose().eval()}}, "ut");
    CHECK(max_abs(transposed(channel, bell).right_action - channel_t.right_action) <=
          1e-9);
  }
}

TEST_CASE("random unitaries are unitary and deterministic") {
  SplitMix64 a(5), b(5);
  const CMatrix ua = random_unitary(2, a);
  const CMatrix ub = random_unitary(2, b);
  CHECK(max_abs(CMatrix(ua - ub)) == 0.0);
  CHECK(max_abs(CMatrix(ua.adjoint() * ua - CMatrix::Identity(2, 2))) < 1e-13);
}

TEST_CASE("random transformations are always physical") {
  for (const auto& theory : {build_classical(3), build_qubit()}) {
    SplitMix64 rng(2024);
    for (int k = 0; k < 1000; ++k) {
      const TransformationMatrix t = random_transformation(theory, rng);
      CHECK(is_physical(t.right_action, theory, 1e-9));
    }
  }
}

TEST_CASE("random transformations reproduce bit for bit under one seed") {
  const Theory qubit = build_qubit();
  SplitMix64 a(77), b(77);
  for (int k = 0; k < 10; ++k) {
    CHECK(max_abs(random_transformation(qubit, a).right_action -
                  random_transformation(qubit, b).right_action) == 0.0);
  }
}

TEST_CASE("scaling a map to zero yields the zero map, coexistent with anything") {
  const Theory qubit = build_qubit();
  SplitMix64 rng(8);
  const TransformationMatrix t = random_transformation(qubit, rng);
  const TransformationMatrix zero = scale(0.0, t);
  CHECK(max_abs(zero.right_action) == 0.0);
  for (const auto& gen : qubit.transformations)
    CHECK(are_coexistent(zero, gen, qubit));
}

TEST_CASE("random states are normalized convex mixtures") {
  for (const auto& theory : {build_classical(2), build_qubit()}) {
    SplitMix64 rng(15);
    for (int k = 0; k < 100; ++k) {
      const StateVector s = random_state(theory, rng);
      CHECK(std::abs(probability(s, theory.unit_effect) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("model lookup by name") {
  CHECK(build_model("qubit").name == "qubit");
  CHECK(build_model("classical4").effect_dim == 4);
  CHECK_THROWS_AS(build_model("classical0"), SchemaError);
  CHECK_THROWS_AS(build_model("qutrit"), SchemaError);
}

}  // TEST_SUITE
