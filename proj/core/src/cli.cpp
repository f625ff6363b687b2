// SPDX-License-Identifier: Apache-2.0
#include "optheory/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "optheory/calibration.hpp"
#include "optheory/cone.hpp"
#include "optheory/errors.hpp"
#include "optheory/gns.hpp"
#include "optheory/io.hpp"
#include "optheory/models.hpp"
#include "optheory/suites.hpp"
#include "optheory/theory.hpp"
#include "optheory/version.hpp"

namespace optheory {
namespace {

struct GlobalOptions {
  std::string theory_path;
  std::string model;
  double tol = 1e-9;
  double null_threshold = 1e-10;
  std::string format = "text";
  std::string out_path;
};

Theory resolve_theory(const GlobalOptions& g) {
  if (!g.theory_path.empty() && !g.model.empty())
    throw SchemaError("specify either --theory or --model, not both");
  if (!g.theory_path.empty()) return load_theory(g.theory_path);
  if (!g.model.empty()) return build_model(g.model);
  throw SchemaError("specify a theory with --theory PATH or --model NAME");
}

nlohmann::ordered_json vector_to_json(const Vector& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

void emit(const Report& report, const GlobalOptions& g, std::ostream& out,
          std::ostream& err) {
  std::string text = g.format == "json" ? report.to_json().dump(2) + "\n"
                                        : report.to_text();
  if (g.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(g.out_path);
    if (!f) {
      err << "error: cannot write '" << g.out_path << "'\n";
      return;
    }
    f << text;
  }
}

struct SeededOptions {
  int samples = 100;
  std::uint64_t seed = 1;
};

Report run_validate(const Theory& th, const GlobalOptions& g, const SeededOptions& s) {
  Report rep;
  rep.command = "validate";
  rep.theory = th.name;
  rep.tol = g.tol;
  rep.seed = s.seed;
  const ValidationReport v = validate_theory(th, g.tol);
  rep.checks = v.checks;
  for (auto& c : suites::theory_properties(th, s.samples, s.seed, g.tol))
    rep.add(std::move(c));
  rep.extra["worst_residual"] = v.worst_residual();
  return rep;
}

Report run_faithful(const Theory& th, const GlobalOptions& g, const SeededOptions& s) {
  Report rep;
  rep.command = "faithful";
  rep.theory = th.name;
  rep.tol = g.tol;
  rep.seed = s.seed;
  const BipartiteForm form = faithful_form(th);
  rep.checks = suites::faithfulness_suite(th, form, s.samples, s.seed, g.tol);
  rep.extra["form_eigenvalues"] = vector_to_json(form.spectrum().values);
  rep.extra["rank"] = form.rank(g.tol);
  return rep;
}

Report run_transpose(const Theory& th, const GlobalOptions& g, const std::string& name) {
  Report rep;
  rep.command = "transpose";
  rep.theory = th.name;
  rep.tol = g.tol;
  const TransformationMatrix& t = th.transformation(name);
  const BipartiteForm form = faithful_form(th);
  const TransformationMatrix tp = transposed(t, form, g.tol);

  const double defining = max_abs(t.right_action * form.matrix() -
                                  form.matrix() * tp.right_action.transpose());
  rep.add({"transposition-defining-relation", defining <= 1e-10, false, defining,
           "R_A·F = F·R_{A'}ᵀ"});
  const double invol =
      max_abs(transposed(tp, form, g.tol).right_action - t.right_action);
  rep.add({"transposition-involution", invol <= 1e-9, false, invol, "(A')' = A"});
  const double phys = physicality_residual(tp.right_action, th);
  rep.add({"transposed-physicality", phys <= g.tol, true, phys,
           "transposed maps may be generalized (nonphysical)"});
  rep.extra["transformation"] = name;
  rep.extra["transposed"] = matrix_fragment(tp);
  return rep;
}

Report run_gns(const Theory& th, const GlobalOptions& g, const SeededOptions& s) {
  Report rep;
  rep.command = "gns";
  rep.theory = th.name;
  rep.tol = g.tol;
  rep.seed = s.seed;
  const BipartiteForm form = faithful_form(th);
  try {
    const GnsSpace space(th, form, {g.tol, g.null_threshold});
    rep.checks = suites::gns_suite(space, s.samples, s.seed, g.tol);
    rep.extra["form_eigenvalues"] = vector_to_json(form.spectrum().values);
    rep.extra["sign_matrix"] = matrix_to_json(space.sign().s);
    rep.extra["gram_spectrum"] = vector_to_json(space.gram_spectrum());
    rep.extra["dim_h"] = space.dim();
    rep.extra["identification"] = space.identification_holds();
  } catch (const FaithfulnessError& e) {
    rep.add({"dynamical-faithfulness", false, false, 1.0, e.what()});
  } catch (const PositivityError& e) {
    rep.add({"gram-psd", false, false, 1.0, e.what()});
  }
  return rep;
}

Report run_cstar(const Theory& th, const GlobalOptions& g, const SeededOptions& s) {
  Report rep;
  rep.command = "cstar";
  rep.theory = th.name;
  rep.tol = g.tol;
  rep.seed = s.seed;
  const BipartiteForm form = faithful_form(th);
  try {
    const GnsSpace space(th, form, {g.tol, g.null_threshold});
    rep.checks = suites::cstar_suite(space, s.samples, s.seed, g.tol);
    rep.extra["dim_h"] = space.dim();
  } catch (const FaithfulnessError& e) {
    rep.add({"dynamical-faithfulness", false, false, 1.0, e.what()});
  } catch (const PositivityError& e) {
    rep.add({"gram-psd", false, false, 1.0, e.what()});
  }
  return rep;
}

Report run_born(const Theory& th, const GlobalOptions& g, const SeededOptions& s) {
  Report rep;
  rep.command = "born";
  rep.theory = th.name;
  rep.tol = g.tol;
  rep.seed = s.seed;
  const BipartiteForm form = faithful_form(th);
  try {
    const GnsSpace space(th, form, {g.tol, g.null_threshold});
    rep.checks = suites::born_suite(space, s.samples, s.seed, g.tol);
  } catch (const FaithfulnessError& e) {
    rep.add({"dynamical-faithfulness", false, false, 1.0, e.what()});
  } catch (const PositivityError& e) {
    rep.add({"gram-psd", false, false, 1.0, e.what()});
  }
  return rep;
}

struct CalibrateOptions {
  std::string transformation;
  std::int64_t shots = 100000;
  std::uint64_t seed = 1;
  std::string counts_out;
  std::string estimate_out;
  bool project = false;
};

Report run_calibrate(const Theory& th, const GlobalOptions& g, const CalibrateOptions& c,
                     std::ostream& err) {
  Report rep;
  rep.command = "calibrate";
  rep.theory = th.name;
  rep.tol = g.tol;
  rep.seed = c.seed;
  const TransformationMatrix& truth = th.transformation(c.transformation);
  const BipartiteForm form = faithful_form(th);

  CalibrationRun run = run_calibration(th, form, truth, c.shots, c.seed, g.tol);
  if (c.project) {
    run.estimate = project_to_physical(run.estimate, th);
    run.error = estimation_error(run.estimate, truth, th);
  }

  rep.add({"calibration-identifiable", true, false, 0.0,
           std::to_string(run.side1.size()) + "x" + std::to_string(run.side2.size()) +
               " fiducial outcomes"});
  if (c.shots == 0) {
    rep.add({"calibration-roundtrip", run.error.frobenius <= 1e-10, false,
             run.error.frobenius, "noiseless inversion"});
  } else {
    rep.add({"calibration-frobenius-error", true, true, run.error.frobenius,
             std::to_string(c.shots) + " shots"});
  }
  rep.add({"calibration-probability-deviation", true, true,
           run.error.worst_probability_deviation,
           "worst effect probability deviation"});

  rep.extra["transformation"] = c.transformation;
  rep.extra["shots"] = c.shots;
  rep.extra["no_occurrence"] = run.counts.no_occurrence;
  rep.extra["estimate"] = matrix_fragment(run.estimate);

  if (!c.counts_out.empty()) save_counts_csv(run.counts, c.counts_out);
  if (!c.estimate_out.empty()) {
    std::ofstream f(c.estimate_out);
    if (!f)
      err << "error: cannot write '" << c.estimate_out << "'\n";
    else
      f << matrix_fragment(run.estimate).dump(2) << "\n";
  }
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for finite-dimensional operational theories", "optheory"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOptions g;
  app.add_option("--theory", g.theory_path, "theory JSON file");
  app.add_option("--model", g.model, "built-in model: qubit or classicalN");
  app.add_option("--tol", g.tol, "absolute tolerance for equality checks");
  app.add_option("--null-threshold", g.null_threshold,
                 "relative Gram eigenvalue threshold for the quotient null space");
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out_path, "write the report to this file");

  SeededOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "check the theory axioms");
  validate->add_option("--samples", validate_opts.samples, "property-suite sample count");
  validate->add_option("--seed", validate_opts.seed, "property-suite seed");

  SeededOptions faithful_opts;
  auto* faithful = app.add_subcommand("faithful", "check the declared faithful state");
  faithful->add_option("--samples", faithful_opts.samples, "property-suite sample count");
  faithful->add_option("--seed", faithful_opts.seed, "property-suite seed");

  std::string transpose_name;
  auto* transpose = app.add_subcommand("transpose", "transpose one named transformation");
  transpose->add_option("--transformation", transpose_name, "generator name")->required();

  SeededOptions gns_opts;
  auto* gns = app.add_subcommand("gns", "build the representation space and verify it");
  gns->add_option("--samples", gns_opts.samples, "property-suite sample count");
  gns->add_option("--seed", gns_opts.seed, "property-suite seed");

  SeededOptions cstar_opts{50, 1};
  auto* cstar = app.add_subcommand("cstar", "verify the C*-identity on random elements");
  cstar->add_option("--samples", cstar_opts.samples, "sample count");
  cstar->add_option("--seed", cstar_opts.seed, "seed");

  SeededOptions born_opts{20, 1};
  auto* born = app.add_subcommand("born", "verify the Born rule in the representation");
  born->add_option("--trials", born_opts.samples, "trial count");
  born->add_option("--seed", born_opts.seed, "seed");

  CalibrateOptions cal;
  auto* calibrate =
      app.add_subcommand("calibrate", "estimate a transformation from joint statistics");
  calibrate->add_option("--transformation", cal.transformation, "generator name")
      ->required();
  calibrate->add_option("--shots", cal.shots, "shot count (0 = noiseless)");
  calibrate->add_option("--seed", cal.seed, "sampling seed");
  calibrate->add_option("--counts-out", cal.counts_out, "write counts CSV here");
  calibrate->add_option("--estimate-out", cal.estimate_out,
                        "write the estimate JSON fragment here");
  calibrate->add_flag("--project", cal.project, "project the estimate onto the cone");

  std::string export_model;
  auto* export_theory =
      app.add_subcommand("export-theory", "write a built-in model as a theory file");
  export_theory->add_option("model", export_model, "qubit or classicalN")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    if (export_theory->parsed()) {
      const Theory th = build_model(export_model);
      const std::string text = theory_to_json(th).dump(2) + "\n";
      if (g.out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(g.out_path);
        if (!f) {
          err << "error: cannot write '" << g.out_path << "'\n";
          return 2;
        }
        f << text;
      }
      return 0;
    }

    const Theory th = resolve_theory(g);
    Report rep;
    if (validate->parsed()) {
      rep = run_validate(th, g, validate_opts);
    } else if (faithful->parsed()) {
      rep = run_faithful(th, g, faithful_opts);
    } else if (transpose->parsed()) {
      rep = run_transpose(th, g, transpose_name);
    } else if (gns->parsed()) {
      rep = run_gns(th, g, gns_opts);
    } else if (cstar->parsed()) {
      rep = run_cstar(th, g, cstar_opts);
    } else if (born->parsed()) {
      rep = run_born(th, g, born_opts);
    } else if (calibrate->parsed()) {
      rep = run_calibrate(th, g, cal, err);
    } else {
      err << "error: unknown command\n";
      return 2;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    rep.timings_ms.emplace_back("total", elapsed);
    emit(rep, g, out, err);
    return rep.exit_code();
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace optheory
