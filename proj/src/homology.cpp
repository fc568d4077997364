#include "colorlie/homology.hpp"

#include <algorithm>

#include "colorlie/error.hpp"

namespace colorlie {

namespace {

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[static_cast<size_t>(depth)] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<std::pair<std::vector<int>, GroupElement>> exterior_power_basis(
    const ColorLieAlgebra& L, int i) {
  if (i < 0 || i > L.dim())
    throw PreconditionError("exterior power index " + std::to_string(i) + " out of range 0.." +
                            std::to_string(L.dim()));
  std::vector<std::vector<int>> subsets;
  combinations(L.dim(), i, subsets);
  std::vector<std::pair<std::vector<int>, GroupElement>> out;
  for (auto& s : subsets) {
    GroupElement d = identity(L.group());
    for (int j : s) d = group_op(L.group(), d, L.degree(j));
    out.push_back({std::move(s), std::move(d)});
  }
  return out;
}

ValidationReport CochainComplex::structure() const {
  ValidationReport rep;
  int n = length();
  for (int i = 0; i + 1 < n; ++i) {
    Mat prod = d[static_cast<size_t>(i + 1)] * d[static_cast<size_t>(i)];
    if (!prod.is_zero()) rep.add("d2", "d" + std::to_string(i + 1) + " . d" + std::to_string(i) + " != 0");
  }
  for (int i = 0; i < n; ++i) {
    const Mat& m = d[static_cast<size_t>(i)];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero() &&
            !(bases[static_cast<size_t>(i + 1)][static_cast<size_t>(r)].degree ==
              bases[static_cast<size_t>(i)][static_cast<size_t>(c)].degree))
          rep.add("graded", "d" + std::to_string(i) + " entry (" + std::to_string(r) + "," +
                                std::to_string(c) + ") crosses degree blocks");
  }
  return rep;
}

namespace {

// Shared construction for the plain and twisted complexes. For the twisted
// one the action term is scaled by sigma(dx_j, h) where h is the G-degree
// of the cochain column; the bracket term is untouched (the twisted
// resolution keeps the underlying linear differential).
CochainComplex build_ce(const ColorLieAlgebra& L, const GradedModule& M,
                        const SigmaFn* sigma) {
  if (!L.is_honest_lie())
    throw UnsupportedError(
        "Chevalley-Eilenberg complex needs an ordinary Lie algebra; twist the "
        "results instead of the input");
  auto mrep = verify_module(L, M);
  if (!mrep.ok()) throw PreconditionError("invalid module: " + mrep.summary());

  int n = L.dim();
  int md = M.dim();
  CochainComplex cx;
  std::vector<std::map<std::vector<int>, int>> subset_index(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    auto wedges = exterior_power_basis(L, i);
    std::vector<CochainBasisElt> basis;
    for (size_t s = 0; s < wedges.size(); ++s) {
      subset_index[static_cast<size_t>(i)][wedges[s].first] = static_cast<int>(s);
      for (int b = 0; b < md; ++b) {
        CochainBasisElt e;
        e.subset = wedges[s].first;
        e.mod_index = b;
        e.degree = group_sub(L.group(), M.basis[static_cast<size_t>(b)].degree, wedges[s].second);
        basis.push_back(std::move(e));
      }
    }
    cx.bases.push_back(std::move(basis));
  }

  auto col_of = [&](int level, const std::vector<int>& subset, int b) {
    return subset_index[static_cast<size_t>(level)].at(subset) * md + b;
  };

  for (int i = 0; i < n; ++i) {
    Mat m(static_cast<int>(cx.bases[static_cast<size_t>(i + 1)].size()),
          static_cast<int>(cx.bases[static_cast<size_t>(i)].size()));
    std::vector<std::vector<int>> rows;
    combinations(n, i + 1, rows);
    for (const auto& sp : rows) {
      // theta_1: action term
      for (size_t p = 0; p < sp.size(); ++p) {
        int j = sp[static_cast<size_t>(p)];
        std::vector<int> s = sp;
        s.erase(s.begin() + static_cast<long>(p));
        int sign = (p % 2 == 0) ? 1 : -1;
        for (int bcol = 0; bcol < md; ++bcol) {
          int col = col_of(i, s, bcol);
          Scalar scale(sign);
          if (sigma) {
            const GroupElement& h =
                cx.bases[static_cast<size_t>(i)][static_cast<size_t>(col)].degree;
            scale = scale * Scalar((*sigma)(L.degree(j), h));
          }
          for (int brow = 0; brow < md; ++brow) {
            const Scalar& a = M.actions[static_cast<size_t>(j)].at(brow, bcol);
            if (a.is_zero()) continue;
            int row = col_of(i + 1, sp, brow);
            m.at(row, col) += scale * a;
          }
        }
      }
      // theta_2: bracket term
      for (size_t l = 0; l < sp.size(); ++l)
        for (size_t mm = l + 1; mm < sp.size(); ++mm) {
          int sign = ((l + mm) % 2 == 0) ? 1 : -1;  // (-1)^{(l+1)+(m+1)}
          std::vector<int> rest;
          for (size_t t = 0; t < sp.size(); ++t)
            if (t != l && t != mm) rest.push_back(sp[t]);
          for (const auto& [k, c] : L.bracket_basis(sp[l], sp[mm])) {
            if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
            int before = static_cast<int>(
                std::count_if(rest.begin(), rest.end(), [&](int t) { return t < k; }));
            int wsign = (before % 2 == 0) ? 1 : -1;
            std::vector<int> s = rest;
            s.insert(std::upper_bound(s.begin(), s.end(), k), k);
            for (int b = 0; b < md; ++b) {
              int col = col_of(i, s, b);
              int row = col_of(i + 1, sp, b);
              m.at(row, col) += Scalar(sign * wsign) * c;
            }
          }
        }
    }
    cx.d.push_back(std::move(m));
  }
  auto srep = cx.structure();
  if (!srep.ok())
    throw PreconditionError("constructed complex is not a graded complex: " + srep.summary());
  return cx;
}

}  // namespace

CochainComplex ce_complex(const ColorLieAlgebra& L, const GradedModule& M) {
  return build_ce(L, M, nullptr);
}

CochainComplex ce_complex_twisted(const ColorLieAlgebra& L, const Cocycle& sigma,
                                  const GradedModule& M) {
  auto srep = sigma.verify();
  if (!srep.ok()) throw PreconditionError("invalid cocycle: " + srep.summary());
  if (!(sigma.group == L.group())) throw PreconditionError("cocycle group mismatch");
  SigmaFn fn = [&sigma](const GroupElement& g, const GroupElement& h) {
    return sigma.eval(g, h);
  };
  return build_ce(L, M, &fn);
}

ExtResult ext_dims(const CochainComplex& c) {
  ExtResult res;
  int n = c.length();
  std::vector<int> ranks(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) ranks[static_cast<size_t>(i)] = rank(c.d[static_cast<size_t>(i)]);
  for (int i = 0; i <= n; ++i) {
    long dim = c.dim(i);
    long rout = (i < n) ? ranks[static_cast<size_t>(i)] : 0;
    long rin = (i > 0) ? ranks[static_cast<size_t>(i - 1)] : 0;
    res.dims.push_back(dim - rout - rin);
  }
  // per-G-degree refinement: differentials are block diagonal, so ranks split
  for (int i = 0; i <= n; ++i) {
    std::map<GroupElement, long> block;
    std::map<GroupElement, std::vector<int>> idx;
    for (size_t b = 0; b < c.bases[static_cast<size_t>(i)].size(); ++b)
      idx[c.bases[static_cast<size_t>(i)][b].degree].push_back(static_cast<int>(b));
    auto block_rank = [&](int level, const GroupElement& h, bool into) {
      // rank of the differential restricted to the h-block
      if (into && level == 0) return 0;
      if (!into && level == n) return 0;
      const Mat& m = into ? c.d[static_cast<size_t>(level - 1)] : c.d[static_cast<size_t>(level)];
      std::vector<int> cols, rows;
      int clevel = into ? level - 1 : level;
      int rlevel = clevel + 1;
      for (size_t b = 0; b < c.bases[static_cast<size_t>(clevel)].size(); ++b)
        if (c.bases[static_cast<size_t>(clevel)][b].degree == h) cols.push_back(static_cast<int>(b));
      for (size_t b = 0; b < c.bases[static_cast<size_t>(rlevel)].size(); ++b)
        if (c.bases[static_cast<size_t>(rlevel)][b].degree == h) rows.push_back(static_cast<int>(b));
      Mat sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t cc = 0; cc < cols.size(); ++cc)
          sub.at(static_cast<int>(r), static_cast<int>(cc)) = m.at(rows[r], cols[cc]);
      return rank(sub);
    };
    for (const auto& [h, cols] : idx) {
      long v = static_cast<long>(cols.size()) - block_rank(i, h, false) - block_rank(i, h, true);
      if (v != 0) block[h] = v;
    }
    res.per_degree.push_back(std::move(block));
  }
  return res;
}

TwistCompareResult ext_twist_compare(const ColorLieAlgebra& L, const Cocycle& sigma,
                                     const GradedModule& M) {
  TwistCompareResult out;
  out.plain = ext_dims(ce_complex(L, M));
  out.twisted = ext_dims(ce_complex_twisted(L, sigma, M));
  out.equal = out.plain.dims == out.twisted.dims;
  return out;
}

// ---------------------------------------------------------------------------
// minimal resolutions over color-commutative weight-graded algebras

namespace {

struct DiffEntry {
  int cod_gen;
  Monomial m;
  Scalar c;
};
using DiffCol = std::vector<DiffEntry>;

struct FreeRes {
  const GrAlgebra* A = nullptr;
  std::vector<std::vector<int>> gen_weights;  // per step; step 0 = {0}
  std::vector<std::vector<DiffCol>> diffs;    // diffs[s]: columns of d_s, s >= 1
};

using WBasis = std::vector<std::pair<int, Monomial>>;

WBasis weight_basis(const GrAlgebra& A, const std::vector<int>& gens, int w) {
  WBasis out;
  for (size_t t = 0; t < gens.size(); ++t) {
    int mw = w - gens[t];
    if (mw < 0) continue;
    for (auto& m : A.monomials_of_weight(mw)) out.push_back({static_cast<int>(t), std::move(m)});
  }
  return out;
}

std::map<std::pair<int, Monomial>, int> index_of(const WBasis& b) {
  std::map<std::pair<int, Monomial>, int> idx;
  for (size_t i = 0; i < b.size(); ++i) idx[b[i]] = static_cast<int>(i);
  return idx;
}

// matrix of d_s restricted to weight w (s >= 1)
Mat diff_matrix(const FreeRes& R, int s, int w) {
  const GrAlgebra& A = *R.A;
  WBasis dom = weight_basis(A, R.gen_weights[static_cast<size_t>(s)], w);
  WBasis cod = weight_basis(A, R.gen_weights[static_cast<size_t>(s - 1)], w);
  auto cidx = index_of(cod);
  Mat m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    const auto& [t, mono] = dom[j];
    for (const auto& e : R.diffs[static_cast<size_t>(s)][static_cast<size_t>(t)]) {
      auto prod = A.mul_mono(mono, e.m);  // element is mono * g_t, coefficient multiplies left
      if (!prod) continue;
      auto it = cidx.find({e.cod_gen, prod->second});
      if (it == cidx.end())
        throw PreconditionError("internal: resolution entry escapes the weight window");
      m.at(it->second, static_cast<int>(j)) += prod->first * e.c;
    }
  }
  return m;
}

// Resolution builder shared by minimal_resolution and grade_of_trivial.
// Kernels are computed weight by weight; minimal generators are picked
// greedily from the canonical kernel basis against the span of A_+ multiples
// of the generators already chosen.
FreeRes build_resolution(const GrAlgebra& A, int steps, int max_weight,
                         ResolutionTrace& trace) {
  if (steps < 0 || max_weight < 0) throw PreconditionError("steps and max_weight must be >= 0");
  FreeRes R;
  R.A = &A;
  R.gen_weights.push_back({0});
  R.diffs.push_back({});  // unused slot for s = 0

  trace.steps = steps;
  trace.max_weight = max_weight;
  trace.betti.assign(static_cast<size_t>(steps) + 1, {});
  trace.betti[0][0] = 1;
  trace.minimal = true;
  trace.terminated = false;

  for (int s = 1; s <= steps; ++s) {
    std::vector<int> new_weights;
    std::vector<DiffCol> new_cols;
    for (int w = 0; w <= max_weight; ++w) {
      WBasis prev = weight_basis(A, R.gen_weights[static_cast<size_t>(s - 1)], w);
      if (prev.empty()) continue;
      // kernel of d_{s-1} at weight w
      Mat ker;
      if (s == 1) {
        // augmentation A -> k: kernel is everything in weight > 0
        if (w == 0) continue;
        ker = Mat::identity(static_cast<int>(prev.size()));
      } else {
        ker = null_space(diff_matrix(R, s - 1, w));
      }
      if (ker.rows() == 0) continue;
      // span of A_+ multiples of the generators already chosen in this step
      std::vector<std::vector<Scalar>> span_rows;
      auto pidx = index_of(prev);
      for (size_t t = 0; t < new_weights.size(); ++t) {
        int gw = new_weights[t];
        if (gw >= w) continue;
        for (const auto& mono : A.monomials_of_weight(w - gw)) {
          std::vector<Scalar> row(prev.size(), Scalar(0));
          bool any = false;
          for (const auto& e : new_cols[t]) {
            auto prod = A.mul_mono(mono, e.m);
            if (!prod) continue;
            auto it = pidx.find({e.cod_gen, prod->second});
            if (it == pidx.end())
              throw PreconditionError("internal: generator multiple escapes the window");
            row[static_cast<size_t>(it->second)] += prod->first * e.c;
            any = true;
          }
          if (any) span_rows.push_back(std::move(row));
        }
      }
      Mat span(static_cast<int>(span_rows.size()), static_cast<int>(prev.size()));
      for (size_t r = 0; r < span_rows.size(); ++r)
        for (size_t c = 0; c < prev.size(); ++c)
          span.at(static_cast<int>(r), static_cast<int>(c)) = span_rows[r][c];
      Mat reduced = row_space(span);
      int cur_rank = reduced.rows();
      // greedy minimal generator selection in canonical kernel-basis order
      for (int r = 0; r < ker.rows(); ++r) {
        Mat cand(reduced.rows() + 1, static_cast<int>(prev.size()));
        for (int i = 0; i < reduced.rows(); ++i)
          for (int c = 0; c < cand.cols(); ++c) cand.at(i, c) = reduced.at(i, c);
        for (int c = 0; c < cand.cols(); ++c) cand.at(reduced.rows(), c) = ker.at(r, c);
        Mat next = row_space(cand);
        if (next.rows() == cur_rank) continue;
        reduced = std::move(next);
        cur_rank = reduced.rows();
        DiffCol col;
        for (size_t c = 0; c < prev.size(); ++c)
          if (!ker.at(r, static_cast<int>(c)).is_zero()) {
            if (Presentation::monomial_weight(prev[c].second) == 0) trace.minimal = false;
            col.push_back({prev[c].first, prev[c].second, ker.at(r, static_cast<int>(c))});
          }
        new_weights.push_back(w);
        new_cols.push_back(std::move(col));
        ++trace.betti[static_cast<size_t>(s)][w];
      }
    }
    R.gen_weights.push_back(new_weights);
    R.diffs.push_back(new_cols);
    if (new_weights.empty()) trace.terminated = true;
  }

  trace.d2_zero = true;
  for (int s = 2; s <= steps; ++s)
    for (int w = 0; w <= max_weight; ++w) {
      Mat prod = diff_matrix(R, s - 1, w) * diff_matrix(R, s, w);
      if (!prod.is_zero()) trace.d2_zero = false;
    }

  for (int s = 0; s <= steps; ++s) {
    long total = 0;
    for (const auto& [w, c] : trace.betti[static_cast<size_t>(s)]) total += c;
    trace.betti_total.push_back(total);
  }
  return R;
}

}  // namespace

ResolutionTrace minimal_resolution(const GrAlgebra& A, int steps, int max_weight) {
  ResolutionTrace trace;
  build_resolution(A, steps, max_weight, trace);
  return trace;
}

namespace {

// Hom(F_s, A) restricted to weight w: basis (t, m) with |m| = w + w_t.
WBasis hom_basis_at(const GrAlgebra& A, const std::vector<int>& gens, int w, int max_weight) {
  WBasis out;
  for (size_t t = 0; t < gens.size(); ++t) {
    int mw = w + gens[t];
    if (mw < 0 || mw > max_weight) continue;
    for (auto& m : A.monomials_of_weight(mw)) out.push_back({static_cast<int>(t), std::move(m)});
  }
  return out;
}

}  // namespace

ExtResult grade_of_trivial(const GrAlgebra& A, int max_weight) {
  int n = A.ngen();
  int steps = n + 1;
  ResolutionTrace trace;
  FreeRes R = build_resolution(A, steps, max_weight, trace);

  // Hom(-, A) complex, weight by weight; for phi in Hom(F_s, A) given by
  // values b_u = phi(g_u), (d*phi)(g'_tau) = sum_u a_{u tau} b_u with the
  // differential coefficients multiplying from the left.
  auto hom_matrix = [&](int s, int w) {
    // H_{s-1},w -> H_s,w induced by d_s
    WBasis dom = hom_basis_at(A, R.gen_weights[static_cast<size_t>(s - 1)], w, max_weight);
    WBasis cod = hom_basis_at(A, R.gen_weights[static_cast<size_t>(s)], w, max_weight);
    auto cidx = index_of(cod);
    Mat m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
      const auto& [u, b] = dom[j];
      for (size_t tau = 0; tau < R.diffs[static_cast<size_t>(s)].size(); ++tau)
        for (const auto& e : R.diffs[static_cast<size_t>(s)][tau]) {
          if (e.cod_gen != u) continue;
          auto prod = A.mul_mono(e.m, b);
          if (!prod) continue;
          auto it = cidx.find({static_cast<int>(tau), prod->second});
          if (it == cidx.end()) continue;  // truncated away; excluded by the trust window
          m.at(it->second, static_cast<int>(j)) += prod->first * e.c;
        }
    }
    return m;
  };

  auto representable = [&](int s, int w) {
    for (int gw : R.gen_weights[static_cast<size_t>(s)])
      if (w + gw > max_weight) return false;
    return true;
  };

  int wmin = 0;
  for (const auto& gs : R.gen_weights)
    for (int gw : gs) wmin = std::min(wmin, -gw);

  ExtResult res;
  res.truncated = true;
  res.max_weight = max_weight;
  res.conclusive = max_weight >= 2 * n;
  res.dims.assign(static_cast<size_t>(n) + 1, 0);
  res.per_degree.assign(static_cast<size_t>(n) + 1, {});
  for (int i = 0; i <= n; ++i) {
    for (int w = wmin; w <= max_weight; ++w) {
      bool ok = representable(i, w) && representable(i + 1, w) &&
                (i == 0 || representable(i - 1, w));
      if (!ok) continue;
      WBasis here = hom_basis_at(A, R.gen_weights[static_cast<size_t>(i)], w, max_weight);
      if (here.empty()) continue;
      int rank_out = rank(hom_matrix(i + 1, w));
      int rank_in = (i == 0) ? 0 : rank(hom_matrix(i, w));
      long v = static_cast<long>(here.size()) - rank_out - rank_in;
      if (v != 0) {
        res.dims[static_cast<size_t>(i)] += v;
        GroupElement wkey{{w}};
        res.per_degree[static_cast<size_t>(i)][wkey] += v;
      }
    }
  }
  return res;
}

FrobeniusResult frobenius_check(const GrAlgebra& A) {
  for (int p : A.parity)
    if (p > 0)
      throw PreconditionError("Frobenius pairing needs all generators odd");
  int m = A.ngen();
  FrobeniusResult out;
  for (int w = 0; w <= m; ++w)
    for (auto& mono : A.monomials_of_weight(w)) out.basis.push_back(std::move(mono));
  std::sort(out.basis.begin(), out.basis.end());
  Monomial top(static_cast<size_t>(m), 1);
  int dim = static_cast<int>(out.basis.size());
  out.gram = Mat(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto prod = A.mul_mono(out.basis[static_cast<size_t>(i)], out.basis[static_cast<size_t>(j)]);
      if (prod && prod->second == top) out.gram.at(i, j) = prod->first;
    }
  out.det = det(out.gram);
  out.nondegenerate = !out.det.is_zero();
  return out;
}

std::vector<long> hilbert_series(const GrAlgebra& A, int max_weight) {
  std::vector<long> out;
  for (int w = 0; w <= max_weight; ++w) out.push_back(A.dim_weight(w));
  return out;
}

std::vector<long> hilbert_closed_form(int dim_even, int dim_odd, int max_weight) {
  // (1+t)^odd expanded, then repeated division by (1-t) as prefix sums
  std::vector<BigInt> coef(static_cast<size_t>(max_weight) + 1, BigInt(0));
  for (int k = 0; k <= std::min(dim_odd, max_weight); ++k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(dim_odd),
                 static_cast<unsigned long>(k));
    coef[static_cast<size_t>(k)] = b;
  }
  for (int e = 0; e < dim_even; ++e)
    for (size_t w = 1; w < coef.size(); ++w) coef[w] += coef[w - 1];
  std::vector<long> out;
  for (const auto& c : coef) out.push_back(c.get_si());
  return out;
}

}  // namespace colorlie
