#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "colorlie/error.hpp"
#include "colorlie/grading.hpp"

using namespace colorlie;

namespace {

unsigned long test_seed() {
  const char* s = std::getenv("COLORLIE_SEED");
  return s ? std::stoul(s) : 0xC0105EEDUL;
}

Bicharacter quantum_gamma() {
  AbelianGroup G{2, {}};
  Bicharacter g = trivial_bicharacter(G);
  g.m[0][1] = UnitMonomial::q(1);
  g.m[1][0] = UnitMonomial::q(-1);
  return g;
}

Bicharacter example2_gamma() {
  Bicharacter g = quantum_gamma();
  g.m[0][0] = UnitMonomial::minus_one();
  g.m[1][1] = UnitMonomial::minus_one();
  return g;
}

GroupElement random_elt(std::mt19937_64& rng, const AbelianGroup& G) {
  std::uniform_int_distribution<long> c(-5, 5);
  GroupElement g = identity(G);
  for (auto& x : g.v) x = c(rng);
  return reduce(G, g);
}

Bicharacter random_free_bicharacter(std::mt19937_64& rng, int rank) {
  AbelianGroup G{rank, {}};
  Bicharacter g = trivial_bicharacter(G);
  std::uniform_int_distribution<long> e(-3, 3);
  std::uniform_int_distribution<int> s(0, 1);
  for (int i = 0; i < rank; ++i) {
    g.m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
        s(rng) ? UnitMonomial::one() : UnitMonomial::minus_one();
    for (int j = i + 1; j < rank; ++j) {
      UnitMonomial u{s(rng) ? 1 : -1, e(rng)};
      g.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = u;
      g.m[static_cast<size_t>(j)][static_cast<size_t>(i)] = u.inverse();
    }
  }
  return g;
}

Cocycle random_cocycle(std::mt19937_64& rng, int rank) {
  AbelianGroup G{rank, {}};
  Cocycle c = trivial_cocycle(G);
  std::uniform_int_distribution<long> e(-3, 3);
  std::uniform_int_distribution<int> s(0, 1);
  for (auto& row : c.m)
    for (auto& u : row) u = UnitMonomial{s(rng) ? 1 : -1, e(rng)};
  return c;
}

}  // namespace

TEST_CASE("group law in additive coordinates") {
  AbelianGroup Z2{2, {}};
  CHECK(group_op(Z2, {{1, 0}}, {{0, 1}}) == GroupElement{{1, 1}});
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 50; ++t) {
    GroupElement g = random_elt(rng, Z2);
    CHECK(group_op(Z2, g, identity(Z2)) == g);
    CHECK(group_op(Z2, g, group_neg(Z2, g)) == identity(Z2));
  }
  AbelianGroup mod2{0, {2}};
  CHECK(group_op(mod2, {{1}}, {{1}}) == GroupElement{{0}});
  CHECK_THROWS_AS(group_op(Z2, {{1}}, {{0, 1}}), PreconditionError);
}

TEST_CASE("bilinear evaluation reproduces the closed formulas") {
  Bicharacter g1 = quantum_gamma();
  CHECK(g1.eval({{1, 0}}, {{0, 1}}) == UnitMonomial::q(1));
  Bicharacter g2 = example2_gamma();
  CHECK(g2.eval({{1, 0}}, {{1, 0}}) == UnitMonomial::minus_one());
  std::mt19937_64 rng(test_seed());
  AbelianGroup Z2{2, {}};
  for (int t = 0; t < 200; ++t) {
    GroupElement g = random_elt(rng, Z2), h = random_elt(rng, Z2);
    // Example (1): gamma(g,h) = q^(g1 h2 - g2 h1)
    CHECK(g1.eval(g, h) == UnitMonomial::q(g.v[0] * h.v[1] - g.v[1] * h.v[0]));
    // Example (2): extra sign (-1)^(g1 h1 + g2 h2)
    UnitMonomial want{(g.v[0] * h.v[0] + g.v[1] * h.v[1]) % 2 == 0 ? 1 : -1,
                      g.v[0] * h.v[1] - g.v[1] * h.v[0]};
    CHECK(g2.eval(g, h) == want);
    CHECK(g1.eval(identity(Z2), g) == UnitMonomial::one());
  }
}

TEST_CASE("bicharacter verification") {
  CHECK(quantum_gamma().verify().ok());
  CHECK(example2_gamma().verify().ok());
  Bicharacter bad = quantum_gamma();
  bad.m[1][0] = UnitMonomial::q(1);  // q*q != 1
  CHECK(!bad.verify().ok());
  Bicharacter diag = quantum_gamma();
  diag.m[0][0] = UnitMonomial::q(1);
  CHECK(!diag.verify().ok());
  // torsion: gamma(e,e) = q on Z/2 fails (q^2 != 1 in Q(q))
  AbelianGroup mod2{0, {2}};
  Bicharacter t = trivial_bicharacter(mod2);
  t.m[0][0] = UnitMonomial::q(1);
  auto rep = t.verify();
  CHECK(!rep.ok());
  // -1 on an even-order torsion generator is fine
  t.m[0][0] = UnitMonomial::minus_one();
  CHECK(t.verify().ok());
  AbelianGroup mod3{0, {3}};
  Bicharacter t3 = trivial_bicharacter(mod3);
  t3.m[0][0] = UnitMonomial::minus_one();
  CHECK(!t3.verify().ok());
}

TEST_CASE("axioms hold on random triples for random bicharacters") {
  std::mt19937_64 rng(test_seed());
  for (int rep = 0; rep < 5; ++rep) {
    Bicharacter g = random_free_bicharacter(rng, 3);
    REQUIRE(g.verify().ok());
    AbelianGroup G = g.group;
    for (int t = 0; t < 100; ++t) {
      GroupElement a = random_elt(rng, G), b = random_elt(rng, G), c = random_elt(rng, G);
      CHECK(g.eval(a, b) * g.eval(b, a) == UnitMonomial::one());
      CHECK(g.eval(a, group_op(G, b, c)) == g.eval(a, b) * g.eval(a, c));
      CHECK(g.eval(group_op(G, a, b), c) == g.eval(a, c) * g.eval(b, c));
    }
  }
}

TEST_CASE("parity split") {
  Bicharacter g2 = example2_gamma();
  CHECK(g2.parity({{1, 1}}) == 1);
  CHECK(g2.parity({{1, 0}}) == -1);
  CHECK(g2.parity(identity(g2.group)) == 1);
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 200; ++t) {
    GroupElement a = random_elt(rng, g2.group), b = random_elt(rng, g2.group);
    // parity is a homomorphism to {+-1}; G+ is closed under the group law
    CHECK(g2.parity(group_op(g2.group, a, b)) == g2.parity(a) * g2.parity(b));
  }
}

TEST_CASE("bilinear maps satisfy the cocycle identity") {
  std::mt19937_64 rng(test_seed());
  for (int rep = 0; rep < 5; ++rep) {
    Cocycle s = random_cocycle(rng, 3);
    AbelianGroup G = s.group;
    for (int t = 0; t < 100; ++t) {
      GroupElement f = random_elt(rng, G), g = random_elt(rng, G), h = random_elt(rng, G);
      CHECK(s.eval(f, group_op(G, g, h)) * s.eval(g, h) ==
            s.eval(f, g) * s.eval(group_op(G, f, g), h));
    }
  }
}

TEST_CASE("gamma from a cocycle") {
  AbelianGroup Z2{2, {}};
  CHECK(gamma_from_cocycle(trivial_bicharacter(Z2), trivial_cocycle(Z2)) ==
        trivial_bicharacter(Z2));
  // sigma(e1,e2) = q on the trivial gamma0 gives the quantum-plane gamma
  Cocycle s = trivial_cocycle(Z2);
  s.m[0][1] = UnitMonomial::q(1);
  CHECK(gamma_from_cocycle(trivial_bicharacter(Z2), s) == quantum_gamma());
  // symmetric cocycles cancel
  Cocycle sym = trivial_cocycle(Z2);
  sym.m[0][1] = sym.m[1][0] = UnitMonomial::q(4);
  sym.m[0][0] = UnitMonomial{-1, 2};
  CHECK(gamma_from_cocycle(example2_gamma(), sym) == example2_gamma());
  // output is always a valid bicharacter with the same parities
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 30; ++t) {
    Bicharacter g0 = random_free_bicharacter(rng, 3);
    Cocycle c = random_cocycle(rng, 3);
    Bicharacter g = gamma_from_cocycle(g0, c);
    CHECK(g.verify().ok());
    for (int i = 0; i < 3; ++i) {
      GroupElement e = identity(g.group);
      e.v[static_cast<size_t>(i)] = 1;
      CHECK(g.parity(e) == g0.parity(e));
    }
  }
}

TEST_CASE("splitting a bicharacter over a free group") {
  SUBCASE("quantum plane") {
    SplitResult s = split_bicharacter(quantum_gamma());
    CHECK(s.gamma0 == trivial_bicharacter(s.gamma0.group));
    CHECK(s.sigma.m[0][1] == UnitMonomial::q(1));
    CHECK(s.sigma.m[1][0] == UnitMonomial::one());
    CHECK(gamma_from_cocycle(s.gamma0, s.sigma) == quantum_gamma());
  }
  SUBCASE("trivial") {
    AbelianGroup Z2{2, {}};
    SplitResult s = split_bicharacter(trivial_bicharacter(Z2));
    CHECK(s.gamma0 == trivial_bicharacter(Z2));
    CHECK(s.sigma == trivial_cocycle(Z2));
  }
  SUBCASE("color exterior: gamma0 is -1 exactly on odd pairs") {
    SplitResult s = split_bicharacter(example2_gamma());
    CHECK(s.gamma0.m[0][1] == UnitMonomial::minus_one());
    CHECK(s.sigma.m[0][1] == UnitMonomial{-1, 1});  // -q
    CHECK(gamma_from_cocycle(s.gamma0, s.sigma) == example2_gamma());
  }
  SUBCASE("roundtrip as functions on 100 random pairs") {
    std::mt19937_64 rng(test_seed());
    for (const Bicharacter& g : {quantum_gamma(), example2_gamma()}) {
      SplitResult s = split_bicharacter(g);
      Bicharacter back = gamma_from_cocycle(s.gamma0, s.sigma);
      for (int t = 0; t < 100; ++t) {
        GroupElement a = random_elt(rng, g.group), b = random_elt(rng, g.group);
        CHECK(back.eval(a, b) == g.eval(a, b));
        CHECK(s.gamma0.eval(a, b) * s.sigma.eval(a, b) * s.sigma.eval(b, a).inverse() ==
              g.eval(a, b));
      }
    }
  }
  SUBCASE("random free bicharacters round-trip") {
    std::mt19937_64 rng(test_seed());
    for (int t = 0; t < 50; ++t) {
      Bicharacter g = random_free_bicharacter(rng, 4);
      SplitResult s = split_bicharacter(g);
      CHECK(gamma_from_cocycle(s.gamma0, s.sigma) == g);
    }
  }
  SUBCASE("torsion is rejected") {
    AbelianGroup t{1, {2}};
    CHECK_THROWS_AS(split_bicharacter(trivial_bicharacter(t)), UnsupportedError);
  }
}
