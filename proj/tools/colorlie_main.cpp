#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "colorlie/error.hpp"
#include "colorlie/exprparse.hpp"
#include "colorlie/report.hpp"

using namespace colorlie;
using nlohmann::json;

namespace {

unsigned long seed_from_env() {
  const char* s = std::getenv("COLORLIE_SEED");
  if (!s) return 20260809UL;
  try {
    return std::stoul(s);
  } catch (const std::exception&) {
    throw Error("COLORLIE_SEED must be an unsigned integer");
  }
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += " ";
    s += argv[i];
  }
  return s;
}

void emit(const Report& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.text();
}

GradedModule pick_coeffs(const AlgebraFile& f, const std::string& coeffs) {
  if (coeffs == "trivial") return trivial_module(f.algebra);
  if (coeffs == "top") return top_exterior_rep(f.algebra);
  if (auto it = f.modules.find(coeffs); it != f.modules.end()) return it->second;
  return load_module_file(coeffs, f.algebra);
}

GrAlgebra gr_or_fail(const ColorLieAlgebra& L, bool use_gr, const char* cmd) {
  if (!L.is_abelian() && !use_gr)
    throw UnsupportedError(std::string(cmd) +
                           " needs weight-homogeneous relations; the algebra has brackets. "
                           "Pass --gr to work over the associated graded algebra gr(U).");
  return GrAlgebra::of(L);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with color Lie superalgebras: PBW normal forms, "
               "cocycle twists, Ext groups and graded resolutions over Q(q)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string file, expr, out_path, coeffs = "trivial";
  int steps = 3, max_weight = 6;
  bool twist_compare = false, use_gr = false;

  auto* validate = app.add_subcommand("validate", "check every axiom of an algebra file");
  validate->add_option("file", file)->required();

  auto* normalize = app.add_subcommand("normalize", "PBW normal form of an expression");
  normalize->add_option("file", file)->required();
  normalize->add_option("-e,--expr", expr, "expression in the generators")->required();

  auto* twist = app.add_subcommand("twist", "emit the sigma-twisted algebra file");
  twist->add_option("file", file)->required();
  twist->add_option("-o,--output", out_path, "write the twisted file here instead of stdout");

  auto* split = app.add_subcommand(
      "split", "factor gamma as gamma0 * sigma/sigma^T (free abelian grading only)");
  split->add_option("file", file)->required();

  auto* ext = app.add_subcommand("ext", "Ext dimensions from the Chevalley-Eilenberg complex");
  ext->add_option("file", file)->required();
  ext->add_option("--coeffs", coeffs, "trivial | top | module name | module file");
  ext->add_flag("--twist-compare", twist_compare,
                "also compute over the twisted algebra and compare");

  auto* resolve = app.add_subcommand("resolve", "minimal graded free resolution of k");
  resolve->add_option("file", file)->required();
  resolve->add_option("--steps", steps)->check(CLI::Range(0, 32));
  resolve->add_option("--max-weight", max_weight)->check(CLI::Range(0, 64));
  resolve->add_flag("--gr", use_gr, "resolve over gr(U) when the algebra has brackets");

  auto* grade = app.add_subcommand("grade", "truncated Ext^i(k, A): the grade of k");
  grade->add_option("file", file)->required();
  grade->add_option("--max-weight", max_weight)->check(CLI::Range(0, 64));
  grade->add_flag("--gr", use_gr);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of gr(U)");
  hilbert->add_option("file", file)->required();
  hilbert->add_option("--max-weight", max_weight)->check(CLI::Range(0, 64));

  auto* frobenius =
      app.add_subcommand("frobenius", "top-form pairing of a color exterior algebra");
  frobenius->add_option("file", file)->required();

  auto* report = app.add_subcommand("report", "run the full verification suite");
  report->add_option("file", file)->required();

  // let trailing global flags (--json) reach the parent app
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    AlgebraFile f = load_algebra_file(file);
    Report rep;
    rep.command = join_args(argc, argv);

    if (*validate) {
      Report v = run_validate(f);
      rep.checks = std::move(v.checks);
    } else if (*normalize) {
      std::vector<std::string> names;
      for (int i = 0; i < f.algebra.dim(); ++i) names.push_back(f.algebra.name(i));
      Presentation P(f.algebra);
      UEAElement u = P.normalize(parse_expression(expr, names));
      rep.payload["expr"] = expr;
      rep.payload["normal_form"] = P.element_str(u);
      json terms = json::array();
      for (const auto& [m, c] : display_order(u))
        terms.push_back(json{{"coeff", c.str()}, {"monomial", P.term_str(m)}});
      rep.payload["terms"] = std::move(terms);
      if (auto d = P.homogeneous_degree(u)) rep.payload["degree"] = d->str();
      if (!as_json) {
        std::cout << P.element_str(u) << "\n";
        return 0;
      }
    } else if (*twist) {
      if (!f.sigma) throw PreconditionError("algebra file has no sigma to twist by");
      auto ax = f.algebra.verify_color_axioms();
      if (!ax.ok()) throw PreconditionError("algebra fails its axioms: " + ax.summary());
      // the emitted file carries the inverse cocycle, so twisting again
      // returns the original algebra
      AlgebraFile tw{f.algebra.twisted(*f.sigma), f.sigma->inverse(), {}};
      for (const auto& [name, M] : f.modules)
        tw.modules.emplace(name, twist_module(f.algebra, *f.sigma, M));
      json j = algebra_to_json(tw);
      if (!out_path.empty()) {
        std::ofstream o(out_path);
        if (!o) throw Error("cannot write '" + out_path + "'");
        o << j.dump(2) << "\n";
      } else {
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    } else if (*split) {
      SplitResult s = split_bicharacter(f.algebra.gamma());
      Bicharacter back = gamma_from_cocycle(s.gamma0, s.sigma);
      rep.add("roundtrip_on_generators", back == f.algebra.gamma());
      rep.payload["group"] = group_to_json(f.algebra.group());
      rep.payload["gamma0"] = char_matrix_to_json(s.gamma0);
      rep.payload["sigma"] = char_matrix_to_json(s.sigma);
    } else if (*ext) {
      GradedModule M = pick_coeffs(f, coeffs);
      rep.payload["coeffs"] = coeffs;
      if (twist_compare) {
        if (!f.sigma) throw PreconditionError("--twist-compare needs a sigma in the file");
        TwistCompareResult cmp = ext_twist_compare(f.algebra, *f.sigma, M);
        rep.payload["ext"] = ext_result_json(cmp.plain);
        rep.payload["ext_twisted"] = ext_result_json(cmp.twisted);
        rep.add("twist_dims_equal", cmp.equal);
      } else {
        ExtResult r = ext_dims(ce_complex(f.algebra, M));
        rep.payload["ext"] = ext_result_json(r);
      }
    } else if (*resolve) {
      GrAlgebra A = gr_or_fail(f.algebra, use_gr, "resolve");
      ResolutionTrace t = minimal_resolution(A, steps, max_weight);
      rep.payload = trace_json(t);
      rep.add("resolution_minimal", t.minimal);
      rep.add("resolution_d2_zero", t.d2_zero);
    } else if (*grade) {
      GrAlgebra A = gr_or_fail(f.algebra, use_gr, "grade");
      ExtResult r = grade_of_trivial(A, max_weight);
      rep.payload = ext_result_json(r);
    } else if (*hilbert) {
      GrAlgebra A = GrAlgebra::of(f.algebra);
      auto series = hilbert_series(A, max_weight);
      auto closed = hilbert_closed_form(A.dim_even(), A.dim_odd(), max_weight);
      rep.payload["dims"] = series;
      rep.payload["closed_form"] = closed;
      rep.payload["dim_even"] = A.dim_even();
      rep.payload["dim_odd"] = A.dim_odd();
      rep.add("hilbert_matches_closed_form", series == closed);
    } else if (*frobenius) {
      GrAlgebra A = GrAlgebra::of(f.algebra);
      FrobeniusResult fr = frobenius_check(A);
      json basis = json::array();
      for (const auto& m : fr.basis) basis.push_back(A.mono_str(m));
      rep.payload["basis"] = std::move(basis);
      json gram = json::array();
      for (int i = 0; i < fr.gram.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < fr.gram.cols(); ++j) row.push_back(fr.gram.at(i, j).str());
        gram.push_back(std::move(row));
      }
      rep.payload["gram"] = std::move(gram);
      rep.payload["det"] = fr.det.str();
      rep.add("nondegenerate", fr.nondegenerate, "det = " + fr.det.str());
      rep.add("det_is_unit", fr.det.as_unit().has_value());
    } else if (*report) {
      Report full = run_report(f, seed_from_env());
      rep.checks = std::move(full.checks);
      rep.payload = std::move(full.payload);
    }

    emit(rep, as_json);
    return rep.exit_code();
  } catch (const Error& e) {
    if (as_json)
      std::cerr << json{{"error", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
