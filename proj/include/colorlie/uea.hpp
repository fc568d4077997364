#ifndef COLORLIE_UEA_HPP
#define COLORLIE_UEA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/liealg.hpp"

namespace colorlie {

/// Exponent vector of a PBW normal monomial, aligned with the ordered basis
/// x_1 < ... < x_n. Odd generators never exceed exponent 1 in normal form.
using Monomial = std::vector<int>;

/// Element of U(L) as a canonical map normal monomial -> coefficient.
struct UEAElement {
  std::map<Monomial, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const UEAElement& o) const = default;
  void add_term(const Monomial& m, const Scalar& c);
  UEAElement operator+(const UEAElement& o) const;
  UEAElement operator-(const UEAElement& o) const;
  UEAElement scaled(const Scalar& s) const;
};

/// A scalar multiple of a word in the generators, the raw input of the
/// rewriting engine.
struct Word {
  Scalar coeff;
  std::vector<int> gens;
};

using SigmaFn = std::function<UnitMonomial(const GroupElement&, const GroupElement&)>;

/// PBW rewriting system of U(L): x_j x_i -> gamma(j,i) x_i x_j + <x_j,x_i>
/// for j > i, and x_i^2 -> (1/2)<x_i,x_i> for odd x_i. Rewriting always
/// terminates; confluence is equivalent to the Jacobi identity and is
/// checked by consistency_check.
class Presentation {
public:
  explicit Presentation(ColorLieAlgebra L);

  const ColorLieAlgebra& algebra() const { return L_; }
  int ngen() const { return L_.dim(); }

  UEAElement one() const;
  UEAElement gen(int i) const;
  UEAElement from_monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;

  UEAElement normalize(const Word& w) const;
  UEAElement normalize(const std::vector<Word>& ws) const;
  /// Normalizes many independent words; parallel over the batch.
  std::vector<UEAElement> normalize_batch(const std::vector<Word>& ws) const;

  UEAElement multiply(const UEAElement& u, const UEAElement& v) const;

  /// sigma-twisted product u * v = sigma(du, dv) u v on homogeneous parts.
  UEAElement twisted_multiply(const SigmaFn& sigma, const UEAElement& u,
                              const UEAElement& v) const;
  UEAElement twisted_multiply(const Cocycle& sigma, const UEAElement& u,
                              const UEAElement& v) const;

  /// Unit relating the PBW monomial of U(L^sigma) to the iterated twisted
  /// product of its generators in U(L)^sigma.
  Scalar twist_factor(const Cocycle& sigma, const Monomial& m) const;

  /// Diamond-lemma overlap check on all triples x_k x_j x_i with k>=j>=i:
  /// resolving the leftmost pair first must agree with the rightmost.
  ValidationReport consistency_check() const;

  GroupElement monomial_degree(const Monomial& m) const;
  static int monomial_weight(const Monomial& m);
  int element_weight(const UEAElement& u) const;  // max term weight, -1 for 0
  std::optional<GroupElement> homogeneous_degree(const UEAElement& u) const;
  std::map<GroupElement, UEAElement> homogeneous_parts(const UEAElement& u) const;

  /// Leading-term projection onto filtration degree exactly m.
  UEAElement gr_project(const UEAElement& u, int m) const;
  /// Product in gr(U): multiply and keep top filtration degree. Inputs must
  /// be weight-homogeneous.
  UEAElement gr_multiply(const UEAElement& u, const UEAElement& v) const;

  std::string term_str(const Monomial& m) const;
  std::string element_str(const UEAElement& u) const;

private:
  std::optional<std::vector<Word>> rewrite_at(const Word& w, size_t p) const;
  UEAElement normalize_worklist(std::vector<Word> work) const;

  ColorLieAlgebra L_;
};

/// Element of the gamma-graded tensor product A (x) B: pairs of normal
/// monomials with coefficients.
using TensorElement = std::map<std::pair<Monomial, Monomial>, Scalar>;

/// Terms sorted leading-monomial first (weight, then lexicographic).
std::vector<std::pair<Monomial, Scalar>> display_order(const UEAElement& u);

/// (a (x) b)(a' (x) b') = gamma(db, da') aa' (x) bb', extended bilinearly.
/// gamma is the twisting bicharacter of the construction; both factors must
/// be graded by its group.
TensorElement tensor_multiply(const Presentation& A, const Presentation& B,
                              const Bicharacter& gamma, const TensorElement& s,
                              const TensorElement& t);

/// Color-commutative weight-graded algebra: the associated graded algebra of
/// U(L) for the length filtration (equal to U(L) itself when L is abelian).
/// Normal monomials multiply by a unit scaling or to zero (odd squares).
struct GrAlgebra {
  AbelianGroup group;
  Bicharacter gamma;
  std::vector<std::string> names;
  std::vector<GroupElement> degree;
  std::vector<int> parity;  // +1 / -1

  static GrAlgebra of(const ColorLieAlgebra& L);
  int ngen() const { return static_cast<int>(names.size()); }
  int dim_even() const;
  int dim_odd() const;

  /// Product of normal monomials: scalar factor and exponent sum, or
  /// nullopt when an odd generator squares to zero.
  std::optional<std::pair<Scalar, Monomial>> mul_mono(const Monomial& a,
                                                      const Monomial& b) const;

  /// All normal monomials of total weight w, lexicographically ascending.
  std::vector<Monomial> monomials_of_weight(int w) const;
  long dim_weight(int w) const;
  std::string mono_str(const Monomial& m) const;
};

}  // namespace colorlie

#endif
