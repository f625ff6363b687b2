// SPDX-License-Identifier: Apache-2.0
#include "optheory/theory.hpp"

#include <algorithm>
#include <cmath>

#include "optheory/cone.hpp"
#include "optheory/eig.hpp"
#include "optheory/errors.hpp"

namespace optheory {

const TransformationMatrix* Theory::find_transformation(std::string_view n) const {
  for (const auto& t : transformations)
    if (t.name == n) return &t;
  return nullptr;
}

const TransformationMatrix& Theory::transformation(std::string_view n) const {
  const auto* t = find_transformation(n);
  if (!t) throw SchemaError("unknown transformation '" + std::string(n) + "'");
  return *t;
}

std::string cone_kind_name(ConeKind kind) {
  switch (kind) {
    case ConeKind::ClassicalSubstochastic:
      return "classical-substochastic";
    case ConeKind::QuantumChoi:
      return "quantum-choi";
    case ConeKind::Hull:
      return "hull";
  }
  return "unknown";
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.passed; });
}

double ValidationReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.residual);
  return worst;
}

namespace {

void require_square(const Matrix& m, int d, const std::string& what) {
  if (m.rows() != d || m.cols() != d)
    throw DimensionError(what + ": expected " + std::to_string(d) + "x" +
                         std::to_string(d) + " matrix");
}

void check_dimensions(const Theory& th) {
  const int d = th.effect_dim;
  if (d <= 0) throw DimensionError("theory: effect_dim must be positive");
  if (th.unit_effect.dim() != d) throw DimensionError("theory: unit effect length");
  require_square(th.identity.right_action, d, "theory: identity");
  for (const auto& t : th.transformations)
    require_square(t.right_action, d, "theory: transformation '" + t.name + "'");
  for (const auto& s : th.extremal_states)
    if (s.state.dim() != d)
      throw DimensionError("theory: extremal state '" + s.name + "' length");
  if (th.faithful_form) require_square(*th.faithful_form, d, "theory: faithful form");
  if (th.cone.kind == ConeKind::QuantumChoi &&
      th.cone.hilbert_dim * th.cone.hilbert_dim != d)
    throw DimensionError("theory: quantum-choi requires effect_dim = hilbert_dim²");
}

}  // namespace

ValidationReport validate_theory(const Theory& theory, double tol) {
  check_dimensions(theory);
  ValidationReport report;
  const RowVector& e = theory.unit_effect.coords;
  const int d = theory.effect_dim;

  {
    const Matrix& id = theory.identity.right_action;
    const double res = std::max(max_abs(id - Matrix::Identity(d, d)),
                                (e * id - e).cwiseAbs().maxCoeff());
    report.checks.push_back({"identity-neutrality", res <= tol, false, res,
                             "R_I = 1 and e∘I = e"});
  }
  {
    double res = 0.0;
    for (const auto& s : theory.extremal_states)
      res = std::max(res, std::abs(e * s.state.coords - 1.0));
    report.checks.push_back({"state-normalization", res <= tol, false, res,
                             std::to_string(theory.extremal_states.size()) +
                                 " extremal states"});
  }
  {
    double res = 0.0;
    std::string worst;
    for (const auto& t : theory.transformations) {
      const RowVector effect = e * t.right_action;
      for (const auto& s : theory.extremal_states) {
        const double p = effect * s.state.coords;
        const double viol = std::max(-p, p - 1.0);
        if (viol > res) {
          res = viol;
          worst = t.name + " on " + s.name;
        }
      }
    }
    res = std::max(0.0, res);
    report.checks.push_back({"effect-range", res <= tol, false, res,
                             worst.empty() ? "0 ≤ ω(ā) ≤ 1" : "worst: " + worst});
  }
  {
    double res = 0.0;
    for (const auto& ex : theory.experiments) {
      RowVector sum = RowVector::Zero(d);
      for (const auto& t : ex.members) sum += e * t.right_action;
      res = std::max(res, (sum - e).cwiseAbs().maxCoeff());
    }
    report.checks.push_back({"experiment-completeness", res <= tol, false, res,
                             std::to_string(theory.experiments.size()) +
                                 " experiments declared"});
  }
  {
    double res = 0.0;
    std::string worst;
    for (const auto& t : theory.transformations) {
      const double r = physicality_residual(t.right_action, theory);
      if (r > res) {
        res = r;
        worst = t.name;
      }
    }
    report.checks.push_back({"cone-membership", res <= tol, false, res,
                             worst.empty() ? "all generators physical"
                                           : "worst: " + worst});
  }
  return report;
}

double probability(const StateVector& state, const EffectVector& effect) {
  if (state.dim() != effect.dim())
    throw DimensionError("probability: state/effect dimension mismatch");
  return effect.coords * state.coords;
}

EffectVector effect_of(const TransformationMatrix& t, const Theory& theory) {
  if (t.dim() != theory.effect_dim)
    throw DimensionError("effect_of: transformation dimension mismatch");
  return EffectVector(theory.unit_effect.coords * t.right_action);
}

Conditioned conditional_state(const StateVector& state, const TransformationMatrix& t,
                              const Theory& theory, double tol) {
  const double p = probability(state, effect_of(t, theory));
  if (p <= tol)
    throw ConditioningError("conditional_state: transformation '" + t.name +
                            "' has probability " + std::to_string(p));
  return {StateVector((t.right_action * state.coords) / p), p};
}

TransformationMatrix compose(const TransformationMatrix& a, const TransformationMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("compose: dimension mismatch");
  return {a.name + "∘" + b.name, a.right_action * b.right_action};
}

TransformationMatrix add(const TransformationMatrix& a, const TransformationMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("add: dimension mismatch");
  return {a.name + "+" + b.name, a.right_action + b.right_action};
}

TransformationMatrix add_coexistent(const TransformationMatrix& a,
                                    const TransformationMatrix& b, const Theory& theory,
                                    double tol) {
  if (!are_coexistent(a, b, theory, tol))
    throw ConeError("add_coexistent: '" + a.name + "' and '" + b.name +
                    "' are not coexistent");
  return add(a, b);
}

TransformationMatrix scale(double lambda, const TransformationMatrix& a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g·", lambda);
  return {buf + a.name, lambda * a.right_action};
}

bool are_coexistent(const TransformationMatrix& a, const TransformationMatrix& b,
                    const Theory& theory, double tol) {
  const RowVector joint =
      effect_of(a, theory).coords + effect_of(b, theory).coords;
  for (const auto& s : theory.extremal_states)
    if (joint * s.state.coords > 1.0 + tol) return false;
  return true;
}

bool informationally_equivalent(const TransformationMatrix& a,
                                const TransformationMatrix& b, const Theory& theory,
                                double tol) {
  return (effect_of(a, theory).coords - effect_of(b, theory).coords)
             .cwiseAbs()
             .maxCoeff() <= tol;
}

bool dynamically_equivalent(const TransformationMatrix& a, const TransformationMatrix& b,
                            const Theory& theory, double tol) {
  for (const auto& s : theory.extremal_states) {
    const double pa = probability(s.state, effect_of(a, theory));
    const double pb = probability(s.state, effect_of(b, theory));
    if (pa <= tol || pb <= tol) continue;  // conditional state undefined
    const Vector ca = (a.right_action * s.state.coords) / pa;
    const Vector cb = (b.right_action * s.state.coords) / pb;
    if ((ca - cb).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool is_observable(const std::vector<EffectVector>& effects, const Theory& theory,
                   double tol) {
  RowVector sum = RowVector::Zero(theory.effect_dim);
  for (const auto& l : effects) {
    if (l.dim() != theory.effect_dim)
      throw DimensionError("is_observable: effect dimension mismatch");
    sum += l.coords;
  }
  return (sum - theory.unit_effect.coords).cwiseAbs().maxCoeff() <= tol;
}

int effect_rank(const std::vector<EffectVector>& effects, double rel_tol) {
  if (effects.empty()) return 0;
  const int d = effects.front().dim();
  Matrix stacked(static_cast<Eigen::Index>(effects.size()), d);
  for (std::size_t i = 0; i < effects.size(); ++i)
    stacked.row(static_cast<Eigen::Index>(i)) = effects[i].coords;
  const SymEig eig = eigh(Matrix(stacked.transpose() * stacked));
  // singular values are the square roots of these eigenvalues
  const double smax = std::sqrt(std::max(0.0, eig.values.maxCoeff()));
  if (smax == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (std::sqrt(std::max(0.0, eig.values[i])) > rel_tol * smax) ++rank;
  return rank;
}

bool is_informationally_complete(const std::vector<EffectVector>& effects,
                                 const Theory& theory, double rel_tol) {
  return effect_rank(effects, rel_tol) == theory.effect_dim;
}

bool is_minimal_informationally_complete(const std::vector<EffectVector>& effects,
                                         const Theory& theory, double rel_tol) {
  return is_informationally_complete(effects, theory, rel_tol) &&
         static_cast<int>(effects.size()) == theory.effect_dim;
}

}  // namespace optheory
