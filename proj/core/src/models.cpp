// SPDX-License-Identifier: Apache-2.0
#include "optheory/models.hpp"

#include <cmath>
#include <numbers>

#include "optheory/cone.hpp"
#include "optheory/eig.hpp"
#include "optheory/errors.hpp"

namespace optheory {

int KrausSet::dim() const {
  return ops.empty() ? 0 : static_cast<int>(ops.front().rows());
}

CMatrix KrausSet::completeness() const {
  if (ops.empty()) throw Error("kraus set: empty");
  CMatrix sum = CMatrix::Zero(ops.front().rows(), ops.front().cols());
  for (const auto& k : ops) sum += k.adjoint() * k;
  return sum;
}

double KrausSet::trace_increase() const {
  const HermEig eig = eigh(completeness());
  return std::max(0.0, eig.values.maxCoeff() - 1.0);
}

TransformationMatrix ptm_from_kraus(const KrausSet& kraus, const std::string& name,
                                    double tol) {
  const int n = kraus.dim();
  if (n == 0) throw Error("ptm_from_kraus: empty Kraus set");
  for (const auto& k : kraus.ops)
    if (k.rows() != n || k.cols() != n)
      throw DimensionError("ptm_from_kraus: Kraus operators must share one dimension");
  if (kraus.trace_increase() > tol)
    throw ConeError("ptm_from_kraus: Kraus set is trace increasing");

  const auto basis = operator_basis(n);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix r(d, d);
  for (Eigen::Index nu = 0; nu < d; ++nu) {
    CMatrix heis = CMatrix::Zero(n, n);
    for (const auto& k : kraus.ops)
      heis += k.adjoint() * basis[static_cast<std::size_t>(nu)] * k;
    for (Eigen::Index mu = 0; mu < d; ++mu)
      r(nu, mu) = (heis * basis[static_cast<std::size_t>(mu)]).trace().real() / n;
  }
  return {name, r};
}

Theory build_classical(int n) {
  if (n < 1) throw DimensionError("build_classical: n must be at least 1");
  Theory th;
  th.name = "classical" + std::to_string(n);
  th.effect_dim = n;
  th.unit_effect = EffectVector(RowVector::Ones(n));
  th.identity = {"I", Matrix::Identity(n, n)};
  th.cone = {ConeKind::ClassicalSubstochastic, 0};

  th.transformations.push_back(th.identity);
  Experiment select{"select", {}};
  for (int i = 0; i < n; ++i) {
    Matrix sel = Matrix::Zero(n, n);
    sel(i, i) = 1.0;
    TransformationMatrix t{"select_" + std::to_string(i), sel};
    th.transformations.push_back(t);
    select.members.push_back(t);
  }
  th.experiments.push_back(select);

  if (n >= 2) {
    Matrix cyc = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) cyc((j + 1) % n, j) = 1.0;
    th.transformations.push_back({"cycle", cyc});
    for (int j = 0; j < n; ++j) {
      Matrix reset = Matrix::Zero(n, n);
      reset.row(j) = RowVector::Ones(n);
      th.transformations.push_back({"reset_" + std::to_string(j), reset});
    }
  }

  for (int i = 0; i < n; ++i) {
    Vector point = Vector::Zero(n);
    point[i] = 1.0;
    th.extremal_states.push_back({"point_" + std::to_string(i), StateVector(point)});
  }

  th.faithful_form = Matrix::Identity(n, n) / static_cast<double>(n);
  return th;
}

namespace {

CMatrix pauli(int axis) {
  CMatrix m(2, 2);
  const Complex i_unit(0.0, 1.0);
  switch (axis) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -i_unit, i_unit, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

CMatrix rotation_unitary(int axis, double theta) {
  return std::cos(theta / 2.0) * pauli(0) -
         Complex(0.0, 1.0) * std::sin(theta / 2.0) * pauli(axis);
}

TransformationMatrix unitary_channel(const std::string& name, const CMatrix& u) {
  return ptm_from_kraus({{u}}, name);
}

CMatrix psd_sqrt(const CMatrix& m) {
  const HermEig eig = eigh(m);
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    out += std::sqrt(std::max(0.0, eig.values[k])) *
           (eig.vectors.col(k) * eig.vectors.col(k).adjoint());
  return out;
}

}  // namespace

Theory build_qubit() {
  Theory th;
  th.name = "qubit";
  th.effect_dim = 4;
  RowVector e(4);
  e << 2, 0, 0, 0;
  th.unit_effect = EffectVector(e);
  th.identity = {"I", Matrix::Identity(4, 4)};
  th.cone = {ConeKind::QuantumChoi, 2};

  th.transformations.push_back(th.identity);
  th.transformations.push_back(
      unitary_channel("rx90", rotation_unitary(1, std::numbers::pi / 2)));
  th.transformations.push_back(
      unitary_channel("ry90", rotation_unitary(2, std::numbers::pi / 2)));
  th.transformations.push_back(
      unitary_channel("rz90", rotation_unitary(3, std::numbers::pi / 2)));

  const char* axes = "zxy";
  for (int a = 0; a < 3; ++a) {
    const int axis = a == 0 ? 3 : a;  // z, x, y
    const HermEig eig = eigh(pauli(axis));
    Experiment meas{std::string("meas_") + axes[a], {}};
    for (int outcome = 0; outcome < 2; ++outcome) {
      // +1 eigenprojector first: eigenvalues come out ascending
      const Eigen::Index col = outcome == 0 ? 1 : 0;
      const CMatrix proj = eig.vectors.col(col) * eig.vectors.col(col).adjoint();
      TransformationMatrix t = ptm_from_kraus(
          {{proj}}, std::string("meas_") + axes[a] + "_" + std::to_string(outcome));
      th.transformations.push_back(t);
      meas.members.push_back(t);
    }
    th.experiments.push_back(meas);
  }

  // tetrahedral (symmetric informationally complete) branches
  const double s3 = 1.0 / std::sqrt(3.0);
  const double dirs[4][3] = {{s3, s3, s3}, {s3, -s3, -s3}, {-s3, s3, -s3}, {-s3, -s3, s3}};
  Experiment sic{"sic", {}};
  for (int k = 0; k < 4; ++k) {
    CMatrix m = 0.25 * (pauli(0) + dirs[k][0] * pauli(1) + dirs[k][1] * pauli(2) +
                        dirs[k][2] * pauli(3));
    TransformationMatrix t =
        ptm_from_kraus({{psd_sqrt(m)}}, "sic_" + std::to_string(k));
    th.transformations.push_back(t);
    sic.members.push_back(t);
  }
  th.experiments.push_back(sic);

  {
    const double p = 0.5;
    KrausSet dep;
    dep.ops.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * pauli(0));
    for (int axis = 1; axis <= 3; ++axis)
      dep.ops.push_back(std::sqrt(p / 4.0) * pauli(axis));
    th.transformations.push_back(ptm_from_kraus(dep, "depolarize_half"));
  }
  {
    KrausSet dep;
    for (int axis = 0; axis <= 3; ++axis) dep.ops.push_back(0.5 * pauli(axis));
    th.transformations.push_back(ptm_from_kraus(dep, "depolarize_full"));
  }
  {
    const double gamma = 0.5;
    CMatrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    th.transformations.push_back(ptm_from_kraus({{k0, k1}}, "amp_damp_half"));
  }

  const struct {
    const char* name;
    double x, y, z;
  } blochs[6] = {{"z+", 0, 0, 1},  {"z-", 0, 0, -1}, {"x+", 1, 0, 0},
                 {"x-", -1, 0, 0}, {"y+", 0, 1, 0},  {"y-", 0, -1, 0}};
  for (const auto& b : blochs) {
    Vector s(4);
    s << 0.5, 0.5 * b.x, 0.5 * b.y, 0.5 * b.z;
    th.extremal_states.push_back({b.name, StateVector(s)});
  }

  // Pauli correlators of the maximally entangled pair: (+1, −1, +1)
  Matrix f = Matrix::Zero(4, 4);
  f.diagonal() << 0.25, 0.25, -0.25, 0.25;
  th.faithful_form = f;
  return th;
}

Theory build_model(const std::string& name) {
  if (name == "qubit") return build_qubit();
  if (name.rfind("classical", 0) == 0) {
    const std::string suffix = name.substr(9);
    if (!suffix.empty() && suffix.find_first_not_of("0123456789") == std::string::npos) {
      const int n = std::stoi(suffix);
      if (n >= 1 && n <= 64) return build_classical(n);
    }
  }
  throw SchemaError("unknown model '" + name + "' (expected qubit or classicalN)");
}

BipartiteForm faithful_form(const Theory& theory) {
  if (!theory.faithful_form)
    throw SchemaError("theory '" + theory.name + "' declares no faithful state");
  return BipartiteForm(*theory.faithful_form);
}

CMatrix random_unitary(int n, SplitMix64& rng) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
  // Gram–Schmidt columns
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) g.col(j) -= g.col(k).dot(g.col(j)) * g.col(k);
    g.col(j) /= g.col(j).norm();
  }
  return g;
}

KrausSet random_kraus(int n, SplitMix64& rng, int num_ops) {
  KrausSet set;
  for (int m = 0; m < num_ops; ++m) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
    set.ops.push_back(g);
  }
  const HermEig eig = eigh(set.completeness());
  const double target = 0.5 + 0.5 * rng.next_double();  // λ_max scaled into (0, 1]
  const double factor = std::sqrt(target / eig.values.maxCoeff());
  for (auto& k : set.ops) k *= factor;
  return set;
}

TransformationMatrix random_transformation(const Theory& theory, SplitMix64& rng) {
  switch (theory.cone.kind) {
    case ConeKind::ClassicalSubstochastic: {
      const int n = theory.effect_dim;
      Matrix r(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = rng.next_double();
      for (int j = 0; j < n; ++j) {
        const double target = rng.next_double();
        const double colsum = r.col(j).sum();
        if (colsum > 0.0) r.col(j) *= target / colsum;
      }
      return {"random", r};
    }
    case ConeKind::QuantumChoi:
      return ptm_from_kraus(random_kraus(theory.cone.hilbert_dim, rng), "random");
    case ConeKind::Hull: {
      Matrix r = Matrix::Zero(theory.effect_dim, theory.effect_dim);
      for (const auto& gen : theory.transformations)
        r += rng.next_double() * gen.right_action;
      const RowVector effect = theory.unit_effect.coords * r;
      double worst = 0.0;
      for (const auto& s : theory.extremal_states)
        worst = std::max(worst, double(effect * s.state.coords));
      if (worst > 1.0) r *= (0.5 + 0.5 * rng.next_double()) / worst;
      return {"random", r};
    }
  }
  throw Error("random_transformation: unsupported cone");
}

StateVector random_state(const Theory& theory, SplitMix64& rng) {
  if (theory.extremal_states.empty())
    throw Error("random_state: theory declares no extremal states");
  Vector s = Vector::Zero(theory.effect_dim);
  double total = 0.0;
  std::vector<double> weights;
  for (std::size_t i = 0; i < theory.extremal_states.size(); ++i) {
    const double w = -std::log1p(-rng.next_double());
    weights.push_back(w);
    total += w;
  }
  for (std::size_t i = 0; i < theory.extremal_states.size(); ++i)
    s += (weights[i] / total) * theory.extremal_states[i].state.coords;
  return StateVector(s);
}

}  // namespace optheory
