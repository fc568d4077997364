#ifndef COLORLIE_LIEALG_HPP
#define COLORLIE_LIEALG_HPP

#include <map>
#include <string>
#include <vector>

#include "colorlie/grading.hpp"

namespace colorlie {

/// Sparse element of the algebra: basis index -> coefficient, zero entries
/// absent.
using LieElement = std::map<int, Scalar>;

struct BasisVector {
  std::string name;
  GroupElement degree;
  bool operator==(const BasisVector& o) const = default;
};

/// Finite-dimensional color Lie superalgebra: homogeneous basis with
/// G-degrees and structure constants for the bracket. Construction does not
/// validate; call verify_color_axioms explicitly.
class ColorLieAlgebra {
public:
  ColorLieAlgebra(AbelianGroup group, Bicharacter gamma, std::vector<BasisVector> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  const AbelianGroup& group() const { return group_; }
  const Bicharacter& gamma() const { return gamma_; }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const GroupElement& degree(int i) const { return basis_[static_cast<size_t>(i)].degree; }
  const std::string& name(int i) const { return basis_[static_cast<size_t>(i)].name; }
  int index_of(const std::string& name) const;  // -1 when absent

  /// gamma(dx_i, dx_j) as a unit.
  UnitMonomial gamma_gen(int i, int j) const;
  /// +1/-1 parity of basis vector i.
  int parity(int i) const { return gamma_.parity(degree(i)); }
  int dim_even() const;
  int dim_odd() const;

  void set_bracket(int i, int j, LieElement value);
  const LieElement& bracket_basis(int i, int j) const;

  LieElement bracket(const LieElement& a, const LieElement& b) const;

  /// Gradedness, gamma-skew-symmetry on all pairs, gamma-Jacobi on all
  /// triples. Assumes gamma itself verifies (checked and reported too).
  ValidationReport verify_color_axioms() const;

  /// Scheunert twist: same basis, constants scaled by sigma(dx_i, dx_j),
  /// bicharacter composed with the cocycle.
  ColorLieAlgebra twisted(const Cocycle& sigma) const;

  bool is_abelian() const;
  /// True when every basis parity is + and gamma is 1 on all pairs of basis
  /// degrees; such an algebra is an ordinary Lie algebra.
  bool is_honest_lie() const;

  bool operator==(const ColorLieAlgebra& o) const = default;

private:
  AbelianGroup group_;
  Bicharacter gamma_;
  std::vector<BasisVector> basis_;
  std::vector<std::vector<LieElement>> c_;  // c_[i][j] = <x_i, x_j>
};

LieElement lie_add(const LieElement& a, const LieElement& b);
LieElement lie_scale(const Scalar& s, const LieElement& a);

/// Built-in example algebras. Names: quantum_plane, exterior1, exterior2,
/// exterior3, abelian2, abelian3, heisenberg, sl2, aff1, kx, plus the
/// parametric families abelian_plus:N and abelian_minus:N.
ColorLieAlgebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_names();

/// Abelian algebra on Z^n with trivial gamma (all parities +).
ColorLieAlgebra abelian_plus(int n);
/// Abelian algebra on Z^n, all generators odd, gamma(e_i,e_j) = q for i<j.
ColorLieAlgebra abelian_minus(int n);

}  // namespace colorlie

#endif
