#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "colorlie/error.hpp"
#include "colorlie/homology.hpp"

using namespace colorlie;

namespace {

Cocycle sigma_q(const AbelianGroup& G) {
  Cocycle s = trivial_cocycle(G);
  s.m[0][1] = UnitMonomial::q(1);
  return s;
}

std::vector<long> dims_of(const ColorLieAlgebra& L, const GradedModule& M) {
  return ext_dims(ce_complex(L, M)).dims;
}

long euler(const CochainComplex& c) {
  long e = 0;
  for (int i = 0; i <= c.length(); ++i) e += (i % 2 == 0 ? 1 : -1) * c.dim(i);
  return e;
}

long euler_dims(const std::vector<long>& d) {
  long e = 0;
  for (size_t i = 0; i < d.size(); ++i) e += (i % 2 == 0 ? 1 : -1) * d[i];
  return e;
}

}  // namespace

TEST_CASE("exterior power bases") {
  ColorLieAlgebra sl2 = builtin_algebra("sl2");
  CHECK(exterior_power_basis(sl2, 0).size() == 1);
  CHECK(exterior_power_basis(sl2, 1).size() == 3);
  CHECK(exterior_power_basis(sl2, 2).size() == 3);
  CHECK(exterior_power_basis(sl2, 3).size() == 1);
  CHECK(exterior_power_basis(sl2, 0)[0].second == identity(sl2.group()));
  CHECK_THROWS_AS(exterior_power_basis(sl2, 4), PreconditionError);

  ColorLieAlgebra ab = builtin_algebra("abelian2");
  auto top = exterior_power_basis(ab, 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0].second == GroupElement{{1, 1}});
}

TEST_CASE("Chevalley-Eilenberg complexes") {
  SUBCASE("sl2 with trivial coefficients") {
    ColorLieAlgebra sl2 = builtin_algebra("sl2");
    CochainComplex c = ce_complex(sl2, trivial_module(sl2));
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(1) == 3);
    CHECK(c.dim(2) == 3);
    CHECK(c.dim(3) == 1);
    CHECK(c.structure().ok());
    auto ext = ext_dims(c);
    CHECK(ext.dims == std::vector<long>{1, 0, 0, 1});
  }
  SUBCASE("abelian algebras have zero differentials") {
    ColorLieAlgebra ab = builtin_algebra("abelian3");
    CochainComplex c = ce_complex(ab, trivial_module(ab));
    for (const auto& d : c.d) CHECK(d.is_zero());
    CHECK(ext_dims(c).dims == std::vector<long>{1, 3, 3, 1});
  }
  SUBCASE("Heisenberg differential ranks") {
    ColorLieAlgebra h = builtin_algebra("heisenberg");
    CochainComplex c = ce_complex(h, trivial_module(h));
    CHECK(rank(c.d[0]) == 0);
    CHECK(rank(c.d[1]) == 1);  // only the z* direction is hit
    CHECK(rank(c.d[2]) == 0);
    CHECK(ext_dims(c).dims == std::vector<long>{1, 2, 2, 1});
  }
  SUBCASE("colored input is rejected") {
    ColorLieAlgebra qp = builtin_algebra("quantum_plane");
    CHECK_THROWS_AS(ce_complex(qp, trivial_module(qp)), UnsupportedError);
  }
}

TEST_CASE("Euler characteristic consistency") {
  for (const char* name : {"sl2", "heisenberg", "aff1", "abelian3"}) {
    ColorLieAlgebra L = builtin_algebra(name);
    CAPTURE(name);
    CochainComplex c = ce_complex(L, trivial_module(L));
    CHECK(euler(c) == euler_dims(ext_dims(c).dims));
    CochainComplex t = ce_complex(L, top_exterior_rep(L));
    CHECK(euler(t) == euler_dims(ext_dims(t).dims));
  }
}

TEST_CASE("Poincare duality for unimodular algebras") {
  for (const char* name : {"sl2", "heisenberg", "abelian2", "abelian3"}) {
    ColorLieAlgebra L = builtin_algebra(name);
    CAPTURE(name);
    auto d = dims_of(L, trivial_module(L));
    for (size_t i = 0; i < d.size(); ++i) CHECK(d[i] == d[d.size() - 1 - i]);
  }
}

TEST_CASE("top coefficients: Ext^n is one-dimensional") {
  for (const char* name : {"sl2", "heisenberg", "aff1", "abelian3"}) {
    ColorLieAlgebra L = builtin_algebra(name);
    CAPTURE(name);
    auto d = dims_of(L, top_exterior_rep(L));
    CHECK(d[static_cast<size_t>(L.dim())] == 1);
  }
  // aff1 with its top module in full: (0, 1, 1)
  ColorLieAlgebra aff1 = builtin_algebra("aff1");
  CHECK(dims_of(aff1, top_exterior_rep(aff1)) == std::vector<long>{0, 1, 1});
}

TEST_CASE("twist comparison") {
  SUBCASE("trivial cocycle gives the identical complex") {
    ColorLieAlgebra h = builtin_algebra("heisenberg");
    auto cmp = ext_twist_compare(h, trivial_cocycle(h.group()), trivial_module(h));
    CHECK(cmp.equal);
    CHECK(cmp.plain.dims == cmp.twisted.dims);
  }
  SUBCASE("Heisenberg with sigma(e1,e2) = q, trivial coefficients") {
    ColorLieAlgebra h = builtin_algebra("heisenberg");
    auto cmp = ext_twist_compare(h, sigma_q(h.group()), trivial_module(h));
    CHECK(cmp.plain.dims == std::vector<long>{1, 2, 2, 1});
    CHECK(cmp.equal);
  }
  SUBCASE("abelian plane twisting into the quantum plane") {
    ColorLieAlgebra ab = builtin_algebra("abelian2");
    auto cmp = ext_twist_compare(ab, sigma_q(ab.group()), trivial_module(ab));
    CHECK(cmp.plain.dims == std::vector<long>{1, 2, 1});
    CHECK(cmp.equal);
  }
  SUBCASE("adjoint coefficients exercise the scaled action term") {
    ColorLieAlgebra h = builtin_algebra("heisenberg");
    auto cmp = ext_twist_compare(h, sigma_q(h.group()), adjoint_module(h));
    CHECK(cmp.equal);
    CHECK(cmp.plain.dims == cmp.twisted.dims);
    // per-G-degree refinements agree as well
    CHECK(cmp.plain.per_degree == cmp.twisted.per_degree);
  }
}

TEST_CASE("minimal resolutions") {
  SUBCASE("quantum plane: Koszul, pd(k) = 2") {
    GrAlgebra A = GrAlgebra::of(builtin_algebra("quantum_plane"));
    ResolutionTrace t = minimal_resolution(A, 3, 6);
    CHECK(t.betti_total == std::vector<long>{1, 2, 1, 0});
    CHECK(t.minimal);
    CHECK(t.d2_zero);
    CHECK(t.terminated);
    CHECK(t.betti[1].at(1) == 2);
    CHECK(t.betti[2].at(2) == 1);
  }
  SUBCASE("k[x]: pd(k) = 1") {
    GrAlgebra A = GrAlgebra::of(builtin_algebra("kx"));
    ResolutionTrace t = minimal_resolution(A, 2, 4);
    CHECK(t.betti_total == std::vector<long>{1, 1, 0});
  }
  SUBCASE("k[x]/(x^2): constant Betti numbers, infinite pd evidence") {
    GrAlgebra A = GrAlgebra::of(builtin_algebra("exterior1"));
    ResolutionTrace t = minimal_resolution(A, 6, 7);
    CHECK(t.betti_total == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    CHECK(t.minimal);
    CHECK(t.d2_zero);
    CHECK(!t.terminated);
  }
  SUBCASE("color exterior on 2 generators: Betti i+1 (Koszul dual oracle)") {
    GrAlgebra A = GrAlgebra::of(builtin_algebra("exterior2"));
    ResolutionTrace t = minimal_resolution(A, 5, 6);
    CHECK(t.betti_total == std::vector<long>{1, 2, 3, 4, 5, 6});
    for (int s = 1; s <= 5; ++s) CHECK(t.betti[static_cast<size_t>(s)].at(s) == s + 1);
  }
  SUBCASE("three-variable color polynomial algebra: binomial Betti numbers") {
    GrAlgebra A = GrAlgebra::of(builtin_algebra("heisenberg"));  // gr(U), brackets dropped
    ResolutionTrace t = minimal_resolution(A, 4, 8);
    CHECK(t.betti_total == std::vector<long>{1, 3, 3, 1, 0});
  }
}

TEST_CASE("grade of the trivial module") {
  SUBCASE("quantum plane: grade 2 = dim L+") {
    ExtResult r = grade_of_trivial(GrAlgebra::of(builtin_algebra("quantum_plane")), 6);
    CHECK(r.dims == std::vector<long>{0, 0, 1});
    CHECK(r.truncated);
    CHECK(r.conclusive);
  }
  SUBCASE("k[x]: Ext^1(k, k[x]) = k") {
    ExtResult r = grade_of_trivial(GrAlgebra::of(builtin_algebra("kx")), 4);
    CHECK(r.dims == std::vector<long>{0, 1});
  }
  SUBCASE("color exterior: socle in degree 0 (grade 0 = dim L+)") {
    ExtResult r = grade_of_trivial(GrAlgebra::of(builtin_algebra("exterior2")), 6);
    REQUIRE(!r.dims.empty());
    CHECK(r.dims[0] == 1);  // Hom(k, Lambda) = socle = top wedge
  }
  SUBCASE("gr of the Heisenberg enveloping algebra: grade 3") {
    ExtResult r = grade_of_trivial(GrAlgebra::of(builtin_algebra("heisenberg")), 6);
    CHECK(r.dims == std::vector<long>{0, 0, 0, 1});
  }
}

TEST_CASE("Frobenius pairing of color exterior algebras") {
  SUBCASE("one generator") {
    FrobeniusResult f = frobenius_check(GrAlgebra::of(builtin_algebra("exterior1")));
    REQUIRE(f.gram.rows() == 2);
    CHECK(f.gram.at(0, 0).is_zero());
    CHECK(f.gram.at(0, 1) == Scalar(1));
    CHECK(f.gram.at(1, 0) == Scalar(1));
    CHECK(f.gram.at(1, 1).is_zero());
    CHECK(f.nondegenerate);
  }
  SUBCASE("two generators: anti-diagonal units") {
    FrobeniusResult f = frobenius_check(GrAlgebra::of(builtin_algebra("exterior2")));
    REQUIRE(f.gram.rows() == 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i + j == 3)
          CHECK(f.gram.at(i, j).as_unit().has_value());
        else
          CHECK(f.gram.at(i, j).is_zero());
      }
    CHECK(f.nondegenerate);
    CHECK(f.det.as_unit().has_value());
  }
  SUBCASE("three generators: brute force against the PBW engine") {
    GrAlgebra A = GrAlgebra::of(builtin_algebra("exterior3"));
    FrobeniusResult f = frobenius_check(A);
    CHECK(f.nondegenerate);
    CHECK(f.det.as_unit().has_value());
    // independent route: compute every product with the rewriting engine and
    // read off the coefficient of the top monomial
    Presentation P(builtin_algebra("exterior3"));
    Monomial top(3, 1);
    for (size_t i = 0; i < f.basis.size(); ++i)
      for (size_t j = 0; j < f.basis.size(); ++j) {
        UEAElement prod = P.multiply(P.from_monomial(f.basis[i]), P.from_monomial(f.basis[j]));
        Scalar want(0);
        auto it = prod.terms.find(top);
        if (it != prod.terms.end()) want = it->second;
        CHECK(f.gram.at(static_cast<int>(i), static_cast<int>(j)) == want);
      }
  }
  SUBCASE("even generators are rejected") {
    CHECK_THROWS_AS(frobenius_check(GrAlgebra::of(builtin_algebra("quantum_plane"))),
                    PreconditionError);
  }
}

TEST_CASE("Hilbert series") {
  auto check_algebra = [](const char* name, std::vector<long> head) {
    GrAlgebra A = GrAlgebra::of(builtin_algebra(name));
    auto series = hilbert_series(A, 10);
    CAPTURE(name);
    CHECK(series == hilbert_closed_form(A.dim_even(), A.dim_odd(), 10));
    for (size_t i = 0; i < head.size(); ++i) CHECK(series[i] == head[i]);
  };
  check_algebra("quantum_plane", {1, 2, 3, 4, 5});
  check_algebra("exterior2", {1, 2, 1, 0, 0});
  check_algebra("heisenberg", {1, 3, 6, 10});
  check_algebra("exterior3", {1, 3, 3, 1, 0});
  for (const auto& name : builtin_names()) {
    GrAlgebra A = GrAlgebra::of(builtin_algebra(name));
    CAPTURE(name);
    CHECK(hilbert_series(A, 10) == hilbert_closed_form(A.dim_even(), A.dim_odd(), 10));
  }
}
