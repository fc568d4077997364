#include "colorlie/report.hpp"

#include <random>
#include <sstream>

#include "colorlie/error.hpp"

namespace colorlie {

using nlohmann::json;

void Report::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass ? CheckResult::Status::Pass : CheckResult::Status::Fail, detail});
}

void Report::add_inconclusive(const std::string& name, const std::string& detail) {
  checks.push_back({name, CheckResult::Status::Inconclusive, detail});
}

bool Report::failed() const {
  for (const auto& c : checks)
    if (c.status == CheckResult::Status::Fail) return true;
  return false;
}

json Report::to_json() const {
  json j = payload;
  j["command"] = command;
  json cs = json::array();
  for (const auto& c : checks) {
    json e{{"name", c.name},
           {"status", c.status == CheckResult::Status::Pass         ? "pass"
                      : c.status == CheckResult::Status::Fail       ? "fail"
                                                                    : "inconclusive"}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  if (!cs.empty()) j["checks"] = std::move(cs);
  return j;
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    const char* tag = c.status == CheckResult::Status::Pass         ? "PASS"
                      : c.status == CheckResult::Status::Fail       ? "FAIL"
                                                                    : "????";
    out << "[" << tag << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
  }
  return out.str();
}

json ext_result_json(const ExtResult& r) {
  json j;
  j["dims"] = r.dims;
  json pd = json::array();
  for (const auto& blocks : r.per_degree) {
    json level = json::array();
    for (const auto& [deg, dim] : blocks)
      level.push_back(json{{"degree", deg.str()}, {"dim", dim}});
    pd.push_back(std::move(level));
  }
  j["per_degree"] = std::move(pd);
  if (r.truncated)
    j["truncation"] = json{{"max_weight", r.max_weight}, {"conclusive", r.conclusive}};
  return j;
}

json trace_json(const ResolutionTrace& t) {
  json j;
  json betti = json::array();
  for (const auto& step : t.betti) {
    int top = -1;
    for (const auto& [w, c] : step) top = std::max(top, w);
    json row = json::array();
    for (int w = 0; w <= top; ++w) {
      auto it = step.find(w);
      row.push_back(it == step.end() ? 0L : it->second);
    }
    betti.push_back(std::move(row));
  }
  j["betti"] = std::move(betti);
  j["betti_total"] = t.betti_total;
  j["minimal"] = t.minimal;
  j["d2_zero"] = t.d2_zero;
  j["terminated"] = t.terminated;
  j["truncation"] = json{{"steps", t.steps}, {"max_weight", t.max_weight}};
  return j;
}

Report run_validate(const AlgebraFile& f) {
  Report rep;
  const ColorLieAlgebra& L = f.algebra;
  auto g = L.gamma().verify();
  rep.add("bicharacter_axioms", g.ok(), g.summary() == "ok" ? "" : g.summary());
  auto a = L.verify_color_axioms();
  rep.add("color_axioms", a.ok(), a.summary() == "ok" ? "" : a.summary());
  if (a.ok()) {
    Presentation P(L);
    auto c = P.consistency_check();
    rep.add("pbw_confluence", c.ok(), c.summary() == "ok" ? "" : c.summary());
  }
  if (f.sigma) {
    auto s = f.sigma->verify();
    rep.add("sigma_torsion", s.ok(), s.summary() == "ok" ? "" : s.summary());
  }
  for (const auto& [name, M] : f.modules) {
    auto m = verify_module(L, M);
    rep.add("module:" + name, m.ok(), m.summary() == "ok" ? "" : m.summary());
  }
  return rep;
}

namespace {

Word random_word(std::mt19937_64& rng, int ngen, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(0, ngen - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Word w;
  int c = coef(rng);
  w.coeff = Scalar(c == 0 ? 1 : c);
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.gens.push_back(gen(rng));
  return w;
}

std::string dims_str(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

Report run_report(const AlgebraFile& f, unsigned long seed) {
  Report rep;
  const ColorLieAlgebra& L = f.algebra;

  auto g = L.gamma().verify();
  rep.add("bicharacter_axioms", g.ok(), g.ok() ? "" : g.summary());
  auto ax = L.verify_color_axioms();
  rep.add("color_axioms", ax.ok(), ax.ok() ? "" : ax.summary());
  if (!ax.ok()) return rep;

  Presentation P(L);
  auto conf = P.consistency_check();
  rep.add("pbw_confluence", conf.ok(), conf.ok() ? "" : conf.summary());

  if (L.dim() > 0) {
    std::mt19937_64 rng(seed);
    bool assoc = true;
    for (int t = 0; t < 200 && assoc; ++t) {
      UEAElement u = P.normalize(random_word(rng, L.dim(), 3));
      UEAElement v = P.normalize(random_word(rng, L.dim(), 3));
      UEAElement w = P.normalize(random_word(rng, L.dim(), 3));
      assoc = P.multiply(P.multiply(u, v), w) == P.multiply(u, P.multiply(v, w));
    }
    rep.add("associativity_sample", assoc, "200 random triples");
  }

  GrAlgebra gr = GrAlgebra::of(L);
  {
    auto series = hilbert_series(gr, 10);
    auto closed = hilbert_closed_form(gr.dim_even(), gr.dim_odd(), 10);
    rep.add("hilbert_gr_closed_form", series == closed,
            "gr(U) matches (1+t)^" + std::to_string(gr.dim_odd()) + "/(1-t)^" +
                std::to_string(gr.dim_even()) + " through weight 10");
    json h;
    h["dims"] = series;
    h["closed_form"] = closed;
    rep.payload["hilbert"] = std::move(h);
  }

  if (L.is_honest_lie() && L.dim() > 0) {
    auto cx = ce_complex(L, trivial_module(L));
    auto st = cx.structure();
    rep.add("ce_graded_d2_zero", st.ok(), st.ok() ? "" : st.summary());
    ExtResult ext = ext_dims(cx);
    rep.payload["ext_trivial"] = ext_result_json(ext);

    ExtResult top = ext_dims(ce_complex(L, top_exterior_rep(L)));
    bool law = top.dims[static_cast<size_t>(L.dim())] == 1;
    rep.add("top_coefficients_ext_n_is_k", law,
            "Ext^" + std::to_string(L.dim()) + "(k, top) = " +
                std::to_string(top.dims[static_cast<size_t>(L.dim())]));

    bool unimodular = true;
    for (int i = 0; i < L.dim() && unimodular; ++i) {
      Scalar tr(0);
      for (int j = 0; j < L.dim(); ++j) {
        auto it = L.bracket_basis(i, j).find(j);
        if (it != L.bracket_basis(i, j).end()) tr += it->second;
      }
      unimodular = tr.is_zero();
    }
    if (unimodular) {
      bool dual = true;
      for (size_t i = 0; i < ext.dims.size(); ++i)
        dual = dual && ext.dims[i] == ext.dims[ext.dims.size() - 1 - i];
      rep.add("poincare_duality", dual, dims_str(ext.dims));
    }

    if (f.sigma) {
      auto cmp = ext_twist_compare(L, *f.sigma, trivial_module(L));
      rep.add("ext_twist_invariance", cmp.equal,
              dims_str(cmp.plain.dims) + " vs " + dims_str(cmp.twisted.dims));
    }
  }

  if (L.dim() > 0) {
    int steps = std::max(gr.dim_even() + 1, 5);
    int W = std::max(2 * L.dim(), steps + 1);
    ResolutionTrace tr = minimal_resolution(gr, steps, W);
    rep.add("resolution_minimal", tr.minimal);
    rep.add("resolution_d2_zero", tr.d2_zero);
    rep.payload["resolution"] = trace_json(tr);
    if (gr.dim_odd() == 0) {
      bool pd = true;
      int n = gr.dim_even();
      pd = tr.betti_total[static_cast<size_t>(n)] > 0;
      for (int s = n + 1; s <= steps; ++s) pd = pd && tr.betti_total[static_cast<size_t>(s)] == 0;
      rep.add("pd_of_k_equals_dim_even", pd, "projective dimension " + std::to_string(n));
    } else {
      bool inf = true;
      for (int s = 0; s <= steps; ++s) inf = inf && tr.betti_total[static_cast<size_t>(s)] > 0;
      rep.add("infinite_pd_evidence", inf,
              "Betti numbers stay nonzero through step " + std::to_string(steps));
    }

    ExtResult grade = grade_of_trivial(gr, W);
    int first = -1;
    for (size_t i = 0; i < grade.dims.size(); ++i)
      if (grade.dims[i] != 0) {
        first = static_cast<int>(i);
        break;
      }
    bool ok = first == gr.dim_even();
    if (!grade.conclusive && !ok)
      rep.add_inconclusive("grade_of_k_equals_dim_even",
                           "truncated at weight " + std::to_string(W));
    else
      rep.add("grade_of_k_equals_dim_even", ok,
              "first nonzero Ext^i(k, gr U) at i = " + std::to_string(first) + ", dim L+ = " +
                  std::to_string(gr.dim_even()));
    rep.payload["grade"] = ext_result_json(grade);
  }

  if (L.dim() > 0 && gr.dim_even() == 0) {
    auto fr = frobenius_check(gr);
    bool unit = fr.nondegenerate && fr.det.as_unit().has_value();
    rep.add("frobenius_unit_gram_det", unit, "det = " + fr.det.str());
  }

  if (f.sigma) {
    ColorLieAlgebra tw = L.twisted(*f.sigma);
    auto twax = tw.verify_color_axioms();
    rep.add("twist_preserves_axioms", twax.ok(), twax.ok() ? "" : twax.summary());
    ColorLieAlgebra back = tw.twisted(f.sigma->inverse());
    rep.add("twist_roundtrip", back == L);
  }
  return rep;
}

}  // namespace colorlie
