#ifndef COLORLIE_HOMOLOGY_HPP
#define COLORLIE_HOMOLOGY_HPP

#include <map>

#include "colorlie/gmod.hpp"
#include "colorlie/uea.hpp"

namespace colorlie {

/// Basis element of C^i = Hom(Lambda^i L, M): an increasing index tuple and
/// a module basis index. Its G-degree is deg(v_b) - deg(wedge).
struct CochainBasisElt {
  std::vector<int> subset;
  int mod_index = 0;
  GroupElement degree;
};

struct CochainComplex {
  std::vector<std::vector<CochainBasisElt>> bases;  // per cohomological degree 0..n
  std::vector<Mat> d;                               // d[i]: C^i -> C^(i+1), i = 0..n-1

  int length() const { return static_cast<int>(bases.size()) - 1; }
  long dim(int i) const { return static_cast<long>(bases[static_cast<size_t>(i)].size()); }

  /// d.d = 0 and degree-block structure of every differential.
  ValidationReport structure() const;
};

struct ExtResult {
  std::vector<long> dims;
  std::vector<std::map<GroupElement, long>> per_degree;  // refinement, aligned with dims
  bool truncated = false;  // weight-truncated computation (Ext against the algebra)
  int max_weight = -1;
  bool conclusive = true;
};

/// Basis of Lambda^i L: increasing index tuples with product degrees.
std::vector<std::pair<std::vector<int>, GroupElement>> exterior_power_basis(
    const ColorLieAlgebra& L, int i);

/// Chevalley-Eilenberg cochain complex of an ordinary Lie algebra with
/// coefficients in a finite-dimensional module. Colored or odd input is
/// rejected; color results are reached through the twist comparison.
CochainComplex ce_complex(const ColorLieAlgebra& L, const GradedModule& M);

/// Hom complex over the twisted algebra U(L^sigma) with coefficients in
/// M^sigma, induced from the twisted resolution: the action term of the
/// differential picks up sigma(dx_j, h) on the degree-h cochain block.
CochainComplex ce_complex_twisted(const ColorLieAlgebra& L, const Cocycle& sigma,
                                  const GradedModule& M);

/// Cohomology dimensions from exact ranks.
ExtResult ext_dims(const CochainComplex& c);

struct TwistCompareResult {
  ExtResult plain;
  ExtResult twisted;
  bool equal = false;
};

/// Ext over U(L) versus Ext over U(L^sigma) with coefficients M / M^sigma.
TwistCompareResult ext_twist_compare(const ColorLieAlgebra& L, const Cocycle& sigma,
                                     const GradedModule& M);

struct ResolutionTrace {
  int steps = 0;
  int max_weight = 0;
  std::vector<std::map<int, long>> betti;  // per step: internal weight -> count
  std::vector<long> betti_total;           // per step
  bool minimal = false;     // every differential entry has positive weight
  bool d2_zero = false;     // within the computed window
  bool terminated = false;  // a step produced no generators inside the window
};

/// Minimal graded free resolution of the trivial module over a
/// color-commutative weight-graded algebra, computed degree by degree up to
/// (steps, max_weight).
ResolutionTrace minimal_resolution(const GrAlgebra& A, int steps, int max_weight);

/// Truncated Ext^i(k, A) for i = 0..ngen, computed by applying Hom(-, A) to
/// the minimal resolution. Weights where the truncation cuts off matrix
/// targets are excluded; conclusive follows the max_weight >= 2*ngen rule.
ExtResult grade_of_trivial(const GrAlgebra& A, int max_weight);

struct FrobeniusResult {
  std::vector<Monomial> basis;  // 2^m square-free monomials, lex ascending
  Mat gram;                     // pairing to the top coefficient
  Scalar det;
  bool nondegenerate = false;
};

/// Top-form pairing of a color exterior algebra (all generators odd):
/// gram(a,b) = coefficient of x_1...x_m in a*b.
FrobeniusResult frobenius_check(const GrAlgebra& A);

/// dim A_w for w = 0..max_weight by enumeration of normal monomials.
std::vector<long> hilbert_series(const GrAlgebra& A, int max_weight);

/// Coefficients of (1+t)^dim_odd / (1-t)^dim_even, the closed form the
/// enumeration must match.
std::vector<long> hilbert_closed_form(int dim_even, int dim_odd, int max_weight);

}  // namespace colorlie

#endif
