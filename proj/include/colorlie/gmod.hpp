#ifndef COLORLIE_GMOD_HPP
#define COLORLIE_GMOD_HPP

#include "colorlie/liealg.hpp"
#include "colorlie/linalg.hpp"

namespace colorlie {

/// Finite-dimensional G-graded U(L)-module: homogeneous basis plus one
/// action matrix per algebra generator. Column convention:
/// x_g . v_j = sum_i actions[g](i,j) v_i.
struct GradedModule {
  std::vector<BasisVector> basis;
  std::vector<Mat> actions;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const GradedModule& o) const = default;
};

/// Checks gradedness of every action block and the defining relations
/// rho(x_a) rho(x_b) - gamma(a,b) rho(x_b) rho(x_a) = rho(<x_a,x_b>) on all
/// generator pairs (odd squares are the diagonal case).
ValidationReport verify_module(const ColorLieAlgebra& L, const GradedModule& M);

/// Trivial module k in degree e; every generator acts by zero.
GradedModule trivial_module(const ColorLieAlgebra& L);

/// Adjoint module: x_g acts by the bracket on the algebra itself.
GradedModule adjoint_module(const ColorLieAlgebra& L);

/// One-dimensional module on the top exterior power of an ordinary Lie
/// algebra; each y acts by the trace of ad(y). Rejects colored/odd input.
GradedModule top_exterior_rep(const ColorLieAlgebra& L);

/// Module twist of Scheunert's equivalence: the action of x on the degree-h
/// block is scaled by sigma(dx, h). The result is a module over L.twisted(sigma).
GradedModule twist_module(const ColorLieAlgebra& L, const Cocycle& sigma,
                          const GradedModule& M);

/// Degree preservation and U-equivariance of a matrix V -> W.
ValidationReport verify_map(const ColorLieAlgebra& L, const GradedModule& V,
                            const GradedModule& W, const Mat& phi);

/// Canonical basis of the space of graded module homomorphisms V -> W,
/// solved exactly from the equivariance equations.
std::vector<Mat> hom_basis(const ColorLieAlgebra& L, const GradedModule& V,
                           const GradedModule& W);

struct KernelImage {
  Mat kernel_basis;        // rows: canonical vectors in V coordinates
  Mat image_basis;         // rows: canonical vectors in W coordinates
  GradedModule kernel_mod; // induced module structure on the kernel
  GradedModule image_mod;  // induced module structure on the image
};

/// Exact kernel and image of an equivariant graded map, block by degree
/// block; canonical bases make subspace equality a matrix equality.
/// Throws if phi fails verify_map or if a subspace is not action-stable.
KernelImage kernel_image(const ColorLieAlgebra& L, const GradedModule& V,
                         const GradedModule& W, const Mat& phi);

}  // namespace colorlie

#endif
