#ifndef COLORLIE_GRADING_HPP
#define COLORLIE_GRADING_HPP

#include <compare>
#include <string>
#include <vector>

#include "colorlie/scalar.hpp"
#include "colorlie/validation.hpp"

namespace colorlie {

/// Finitely generated abelian group Z^r x Z/m_1 x ... x Z/m_s in additive
/// coordinates. Elements are plain coordinate vectors of length r + s with
/// torsion residues kept reduced.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<long> torsion_orders;

  int ngen() const { return free_rank + static_cast<int>(torsion_orders.size()); }
  bool operator==(const AbelianGroup& o) const = default;
  std::string str() const;
};

struct GroupElement {
  std::vector<long> v;

  bool operator==(const GroupElement& o) const = default;
  auto operator<=>(const GroupElement& o) const = default;
  std::string str() const;
};

GroupElement identity(const AbelianGroup& G);
GroupElement reduce(const AbelianGroup& G, GroupElement g);
GroupElement group_op(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const AbelianGroup& G, const GroupElement& a);
GroupElement group_sub(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
void check_conform(const AbelianGroup& G, const GroupElement& g);

/// Unit-valued map on G x G stored by its values on generator pairs and
/// extended multiplicatively bilinearly. Base for both bicharacters and
/// 2-cocycles (a bilinear map satisfies the cocycle identity for free).
struct GenMatrixChar {
  AbelianGroup group;
  std::vector<std::vector<UnitMonomial>> m;  // m[i][j] = value(e_i, e_j)

  UnitMonomial eval(const GroupElement& g, const GroupElement& h) const;
  bool operator==(const GenMatrixChar& o) const = default;
};

struct Bicharacter : GenMatrixChar {
  /// Checks skew-symmetry on generators, +-1 diagonal and torsion
  /// compatibility. Bilinearity then gives axioms (multiplicativity in
  /// each slot, gamma(g,h)gamma(h,g)=1) on the whole group.
  ValidationReport verify() const;

  /// +1 or -1; gamma(g,g) for a verified bicharacter.
  int parity(const GroupElement& g) const;
};

struct Cocycle : GenMatrixChar {
  ValidationReport verify() const;  // torsion compatibility only
  Cocycle inverse() const;          // entrywise; the inverse cocycle
};

Bicharacter trivial_bicharacter(const AbelianGroup& G);
Cocycle trivial_cocycle(const AbelianGroup& G);

/// gamma(g,h) = gamma0(g,h) * sigma(g,h) * sigma(h,g)^-1. The result has the
/// same diagonal (hence the same parity split) as gamma0.
Bicharacter gamma_from_cocycle(const Bicharacter& gamma0, const Cocycle& sigma);

/// Constructive converse for free abelian G: gamma0 is the sign bicharacter
/// of gamma's parities and sigma is upper triangular on generators, with
/// gamma_from_cocycle(gamma0, sigma) == gamma exactly. Torsion is rejected.
struct SplitResult {
  Bicharacter gamma0;
  Cocycle sigma;
};
SplitResult split_bicharacter(const Bicharacter& gamma);

}  // namespace colorlie

#endif
