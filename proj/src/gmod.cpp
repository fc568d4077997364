#include "colorlie/gmod.hpp"

#include <map>

#include "colorlie/error.hpp"

namespace colorlie {

ValidationReport verify_module(const ColorLieAlgebra& L, const GradedModule& M) {
  ValidationReport rep;
  int n = L.dim();
  int d = M.dim();
  if (static_cast<int>(M.actions.size()) != n) {
    rep.add("shape", "module has " + std::to_string(M.actions.size()) +
                         " action matrices, expected " + std::to_string(n));
    return rep;
  }
  for (int g = 0; g < n; ++g)
    if (M.actions[static_cast<size_t>(g)].rows() != d ||
        M.actions[static_cast<size_t>(g)].cols() != d) {
      rep.add("shape", "action of " + L.name(g) + " is not " + std::to_string(d) + "x" +
                           std::to_string(d));
      return rep;
    }
  for (const auto& b : M.basis) check_conform(L.group(), b.degree);

  // gradedness of every action entry
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (M.actions[static_cast<size_t>(g)].at(i, j).is_zero()) continue;
        GroupElement want = group_op(L.group(), L.degree(g),
                                     M.basis[static_cast<size_t>(j)].degree);
        if (!(M.basis[static_cast<size_t>(i)].degree == want))
          rep.add("gradedness", L.name(g) + " maps " + M.basis[static_cast<size_t>(j)].name +
                                    " onto " + M.basis[static_cast<size_t>(i)].name +
                                    " across degree blocks");
      }

  // defining relations of U(L) on all ordered generator pairs
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Mat& ra = M.actions[static_cast<size_t>(a)];
      const Mat& rb = M.actions[static_cast<size_t>(b)];
      Mat comm = ra * rb;
      Mat swapped = rb * ra;
      Scalar gamma{Scalar(L.gamma_gen(a, b))};
      Mat rhs(d, d);
      for (const auto& [k, c] : L.bracket_basis(a, b))
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            rhs.at(i, j) += c * M.actions[static_cast<size_t>(k)].at(i, j);
      bool ok = true;
      for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j)
          if (!(comm.at(i, j) - gamma * swapped.at(i, j) == rhs.at(i, j))) ok = false;
      if (!ok)
        rep.add("relation", "rho(" + L.name(a) + ")rho(" + L.name(b) + ") - gamma rho(" +
                                L.name(b) + ")rho(" + L.name(a) + ") != rho(<" + L.name(a) +
                                "," + L.name(b) + ">)");
    }
  return rep;
}

GradedModule trivial_module(const ColorLieAlgebra& L) {
  GradedModule M;
  M.basis.push_back({"1", identity(L.group())});
  M.actions.assign(static_cast<size_t>(L.dim()), Mat(1, 1));
  return M;
}

GradedModule adjoint_module(const ColorLieAlgebra& L) {
  GradedModule M;
  M.basis = L.basis();
  int d = L.dim();
  for (int g = 0; g < d; ++g) {
    Mat a(d, d);
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : L.bracket_basis(g, j)) a.at(k, j) = c;
    M.actions.push_back(std::move(a));
  }
  return M;
}

GradedModule top_exterior_rep(const ColorLieAlgebra& L) {
  if (!L.is_honest_lie())
    throw UnsupportedError(
        "top exterior representation needs an ordinary Lie algebra "
        "(trivial gamma on the support, no odd generators)");
  GradedModule M;
  GroupElement top = identity(L.group());
  for (int i = 0; i < L.dim(); ++i) top = group_op(L.group(), top, L.degree(i));
  M.basis.push_back({"top", top});
  for (int g = 0; g < L.dim(); ++g) {
    Mat a(1, 1);
    Scalar trace(0);
    for (int j = 0; j < L.dim(); ++j) {
      const auto& br = L.bracket_basis(g, j);
      auto it = br.find(j);
      if (it != br.end()) trace += it->second;
    }
    a.at(0, 0) = trace;
    M.actions.push_back(std::move(a));
  }
  return M;
}

GradedModule twist_module(const ColorLieAlgebra& L, const Cocycle& sigma,
                          const GradedModule& M) {
  auto rep = sigma.verify();
  if (!rep.ok()) throw PreconditionError("invalid cocycle: " + rep.summary());
  GradedModule out = M;
  for (int g = 0; g < L.dim(); ++g)
    for (int j = 0; j < M.dim(); ++j) {
      Scalar f{Scalar(sigma.eval(L.degree(g), M.basis[static_cast<size_t>(j)].degree))};
      for (int i = 0; i < M.dim(); ++i)
        out.actions[static_cast<size_t>(g)].at(i, j) =
            f * M.actions[static_cast<size_t>(g)].at(i, j);
    }
  return out;
}

ValidationReport verify_map(const ColorLieAlgebra& L, const GradedModule& V,
                            const GradedModule& W, const Mat& phi) {
  ValidationReport rep;
  if (phi.rows() != W.dim() || phi.cols() != V.dim()) {
    rep.add("shape", "map is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                         ", expected " + std::to_string(W.dim()) + "x" +
                         std::to_string(V.dim()));
    return rep;
  }
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j)
      if (!phi.at(i, j).is_zero() &&
          !(W.basis[static_cast<size_t>(i)].degree == V.basis[static_cast<size_t>(j)].degree))
        rep.add("degree", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") crosses degree blocks");
  for (int g = 0; g < L.dim(); ++g) {
    Mat lhs = phi * V.actions[static_cast<size_t>(g)];
    Mat rhs = W.actions[static_cast<size_t>(g)] * phi;
    if (!(lhs == rhs)) rep.add("equivariance", "map does not commute with " + L.name(g));
  }
  return rep;
}

std::vector<Mat> hom_basis(const ColorLieAlgebra& L, const GradedModule& V,
                           const GradedModule& W) {
  // unknowns: entries (i,j) with matching degrees
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j)
      if (W.basis[static_cast<size_t>(i)].degree == V.basis[static_cast<size_t>(j)].degree)
        slots.push_back({i, j});
  int nu = static_cast<int>(slots.size());
  // equivariance: (phi rhoV(g) - rhoW(g) phi)(i,j) = 0
  std::vector<std::vector<Scalar>> rows;
  for (int g = 0; g < L.dim(); ++g)
    for (int i = 0; i < W.dim(); ++i)
      for (int j = 0; j < V.dim(); ++j) {
        std::vector<Scalar> row(static_cast<size_t>(nu), Scalar(0));
        bool nonzero = false;
        for (int s = 0; s < nu; ++s) {
          auto [a, b] = slots[static_cast<size_t>(s)];
          Scalar coef(0);
          if (a == i) coef += V.actions[static_cast<size_t>(g)].at(b, j);
          if (b == j) coef -= W.actions[static_cast<size_t>(g)].at(i, a);
          if (!coef.is_zero()) {
            row[static_cast<size_t>(s)] = coef;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  Mat sys(static_cast<int>(rows.size()), nu);
  for (int r = 0; r < sys.rows(); ++r)
    for (int c = 0; c < nu; ++c) sys.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  Mat null = null_space(sys);
  std::vector<Mat> basis;
  for (int r = 0; r < null.rows(); ++r) {
    Mat phi(W.dim(), V.dim());
    for (int s = 0; s < nu; ++s) {
      auto [i, j] = slots[static_cast<size_t>(s)];
      phi.at(i, j) = null.at(r, s);
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

namespace {

std::map<GroupElement, std::vector<int>> degree_blocks(const GradedModule& M) {
  std::map<GroupElement, std::vector<int>> blocks;
  for (int i = 0; i < M.dim(); ++i) blocks[M.basis[static_cast<size_t>(i)].degree].push_back(i);
  return blocks;
}

// Induced action matrices on a submodule spanned by the rows of `vectors`
// (in ambient coordinates). Throws when the span is not action-stable.
std::vector<Mat> induced_actions(const ColorLieAlgebra& L, const GradedModule& ambient,
                                 const Mat& vectors, const std::string& what) {
  int k = vectors.rows();
  // solve span^T x = rho(g) v_j for each basis vector
  Mat spanT = vectors.transpose();
  std::vector<Mat> acts;
  for (int g = 0; g < L.dim(); ++g) {
    Mat a(k, k);
    for (int j = 0; j < k; ++j) {
      std::vector<Scalar> rhs(static_cast<size_t>(ambient.dim()), Scalar(0));
      for (int r = 0; r < ambient.dim(); ++r) {
        Scalar acc(0);
        for (int c = 0; c < ambient.dim(); ++c)
          acc += ambient.actions[static_cast<size_t>(g)].at(r, c) * vectors.at(j, c);
        rhs[static_cast<size_t>(r)] = acc;
      }
      std::vector<Scalar> x;
      if (!solve(spanT, rhs, x))
        throw PreconditionError(what + " is not stable under the action of " + L.name(g));
      // confirm the solution exactly (solve() only checks consistency rank-wise)
      for (int r = 0; r < ambient.dim(); ++r) {
        Scalar acc(0);
        for (int t = 0; t < k; ++t) acc += vectors.at(t, r) * x[static_cast<size_t>(t)];
        if (!(acc == rhs[static_cast<size_t>(r)]))
          throw PreconditionError(what + " is not stable under the action of " + L.name(g));
      }
      for (int t = 0; t < k; ++t) a.at(t, j) = x[static_cast<size_t>(t)];
    }
    acts.push_back(std::move(a));
  }
  return acts;
}

}  // namespace

KernelImage kernel_image(const ColorLieAlgebra& L, const GradedModule& V,
                         const GradedModule& W, const Mat& phi) {
  auto rep = verify_map(L, V, W, phi);
  if (!rep.ok()) throw PreconditionError("not a graded module map: " + rep.summary());

  auto vblocks = degree_blocks(V);
  auto wblocks = degree_blocks(W);

  std::vector<std::pair<GroupElement, std::vector<Scalar>>> kernel_rows;  // in V coords
  std::vector<std::pair<GroupElement, std::vector<Scalar>>> image_rows;   // in W coords
  for (const auto& [deg, vidx] : vblocks) {
    std::vector<int> widx;
    if (auto it = wblocks.find(deg); it != wblocks.end()) widx = it->second;
    Mat block(static_cast<int>(widx.size()), static_cast<int>(vidx.size()));
    for (size_t r = 0; r < widx.size(); ++r)
      for (size_t c = 0; c < vidx.size(); ++c)
        block.at(static_cast<int>(r), static_cast<int>(c)) =
            phi.at(widx[r], vidx[c]);
    Mat null = null_space(block);
    for (int r = 0; r < null.rows(); ++r) {
      std::vector<Scalar> full(static_cast<size_t>(V.dim()), Scalar(0));
      for (size_t c = 0; c < vidx.size(); ++c)
        full[static_cast<size_t>(vidx[c])] = null.at(r, static_cast<int>(c));
      kernel_rows.push_back({deg, std::move(full)});
    }
    Mat img = row_space(block.transpose());
    for (int r = 0; r < img.rows(); ++r) {
      std::vector<Scalar> full(static_cast<size_t>(W.dim()), Scalar(0));
      for (size_t c = 0; c < widx.size(); ++c)
        full[static_cast<size_t>(widx[c])] = img.at(r, static_cast<int>(c));
      image_rows.push_back({deg, std::move(full)});
    }
  }

  KernelImage out;
  out.kernel_basis = Mat(static_cast<int>(kernel_rows.size()), V.dim());
  for (size_t r = 0; r < kernel_rows.size(); ++r)
    for (int c = 0; c < V.dim(); ++c)
      out.kernel_basis.at(static_cast<int>(r), c) = kernel_rows[r].second[static_cast<size_t>(c)];
  out.image_basis = Mat(static_cast<int>(image_rows.size()), W.dim());
  for (size_t r = 0; r < image_rows.size(); ++r)
    for (int c = 0; c < W.dim(); ++c)
      out.image_basis.at(static_cast<int>(r), c) = image_rows[r].second[static_cast<size_t>(c)];

  for (size_t r = 0; r < kernel_rows.size(); ++r)
    out.kernel_mod.basis.push_back({"k" + std::to_string(r), kernel_rows[r].first});
  for (size_t r = 0; r < image_rows.size(); ++r)
    out.image_mod.basis.push_back({"i" + std::to_string(r), image_rows[r].first});
  out.kernel_mod.actions = induced_actions(L, V, out.kernel_basis, "kernel");
  out.image_mod.actions = induced_actions(L, W, out.image_basis, "image");
  return out;
}

}  // namespace colorlie
