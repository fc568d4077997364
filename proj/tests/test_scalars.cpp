#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "colorlie/error.hpp"
#include "colorlie/exprparse.hpp"
#include "colorlie/scalar.hpp"

using namespace colorlie;

namespace {

unsigned long test_seed() {
  const char* s = std::getenv("COLORLIE_SEED");
  return s ? std::stoul(s) : 0xC0105EEDUL;
}

Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&](bool nz) {
    Poly p;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) p = p + Poly::monomial(BigInt(coef(rng)), i);
    if (nz && p.is_zero()) p = Poly(1);
    return p;
  };
  Poly num = poly(nonzero);
  Poly den = poly(true);
  return Scalar(num, den);
}

// Independent gcd oracle: plain Euclid over Q[q] with exact rational
// coefficients, no pseudo-division, no content tricks.
std::vector<mpq_class> naive_rem(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  auto deg = [](const std::vector<mpq_class>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
    return d;
  };
  int db = deg(b);
  while (deg(a) >= db && deg(a) >= 0) {
    int da = deg(a);
    mpq_class f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
  }
  return a;
}

int naive_gcd_degree(std::vector<mpq_class> a, std::vector<mpq_class> b) {
  auto deg = [](const std::vector<mpq_class>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
    return d;
  };
  if (deg(a) < deg(b)) std::swap(a, b);
  while (deg(b) >= 0) {
    auto r = naive_rem(a, b);
    a = b;
    b = r;
  }
  return deg(a);
}

}  // namespace

TEST_CASE("gcd cancellation: (q^2-1)/(q-1) = q+1") {
  Poly num = Poly::monomial(BigInt(1), 2) - Poly(1);  // q^2 - 1
  Poly den = Poly::monomial(BigInt(1), 1) - Poly(1);  // q - 1
  Scalar s(num, den);
  CHECK(s == Scalar(Poly::monomial(BigInt(1), 1) + Poly(1)));
  CHECK(s.str() == "q+1");
  // oracle: deg gcd(q^2-1, q-1) = 1 over Q[q]
  CHECK(naive_gcd_degree({mpq_class(-1), mpq_class(0), mpq_class(1)},
                         {mpq_class(-1), mpq_class(1)}) == 1);
  // the cancellation multiplies back exactly
  CHECK(Scalar(num) == s * Scalar(den));
}

TEST_CASE("identities and inverse pairs") {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_scalar(rng);
    CHECK(a + Scalar(0) == a);
    CHECK(a * Scalar(1) == a);
  }
  CHECK(Scalar(1, 2) * Scalar(2) == Scalar(1));
}

TEST_CASE("field laws on random samples") {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 1000; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("canonical form is idempotent and unique") {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 300; ++t) {
    Scalar a = random_scalar(rng, true);
    Poly g = Poly::monomial(BigInt(3), 1) + Poly(2);  // 3q + 2
    Scalar blown(a.num() * g, a.den() * g);
    CHECK(blown == a);
    Scalar renorm(a.num(), a.den());
    CHECK(renorm == a);
    CHECK(renorm.den().lc() > 0);
  }
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Scalar(Poly(1), Poly()), ArithmeticError);
}

TEST_CASE("unit monomial algebra") {
  CHECK(UnitMonomial{-1, 1}.pow(2) == UnitMonomial::q(2));   // (-q)^2 = q^2
  CHECK(UnitMonomial::q(3).pow(-1) == UnitMonomial::q(-3));  // (q^3)^-1 = q^-3
  CHECK(UnitMonomial::minus_one().pow(5) == UnitMonomial::minus_one());
  CHECK(UnitMonomial::q(2) * UnitMonomial{-1, -5} == UnitMonomial{-1, -3});
  CHECK(UnitMonomial{-1, 4}.inverse() == UnitMonomial{-1, -4});
}

TEST_CASE("unit monomial embedding is multiplicative") {
  std::mt19937_64 rng(test_seed());
  std::uniform_int_distribution<int> e(-6, 6);
  std::uniform_int_distribution<int> s(0, 1);
  for (int t = 0; t < 300; ++t) {
    UnitMonomial u{s(rng) ? 1 : -1, e(rng)}, v{s(rng) ? 1 : -1, e(rng)};
    CHECK(Scalar(u * v) == Scalar(u) * Scalar(v));
    CHECK(Scalar(u).as_unit() == u);
  }
}

TEST_CASE("unit recognition rejects non-units") {
  CHECK(!Scalar(1, 2).as_unit());
  CHECK(!Scalar(Poly::monomial(BigInt(1), 1) + Poly(1)).as_unit());
  CHECK(!Scalar(Poly::monomial(BigInt(2), 1)).as_unit());
  CHECK(Scalar::q_power(-2).as_unit() == UnitMonomial::q(-2));
  CHECK((-Scalar::q_power(1)).as_unit() == UnitMonomial{-1, 1});
}

TEST_CASE("unit monomial text forms") {
  CHECK(UnitMonomial::parse("1") == UnitMonomial::one());
  CHECK(UnitMonomial::parse("-1") == UnitMonomial::minus_one());
  CHECK(UnitMonomial::parse("q") == UnitMonomial::q(1));
  CHECK(UnitMonomial::parse("-q^-2") == UnitMonomial{-1, -2});
  CHECK(UnitMonomial::parse("q^3").str() == "q^3");
  CHECK_THROWS_AS(UnitMonomial::parse("2q"), ParseError);
  CHECK_THROWS_AS(UnitMonomial::parse("q^"), ParseError);
  CHECK_THROWS_AS(UnitMonomial::parse(""), ParseError);
}

TEST_CASE("scalar text roundtrip through the expression parser") {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 300; ++t) {
    Scalar a = random_scalar(rng);
    CHECK(parse_scalar(a.str()) == a);
  }
  CHECK(parse_scalar("-3/2*q^-1") == Scalar(-3, 2) * Scalar::q_power(-1));
  CHECK(parse_scalar("(q^2-1)/(q-1)") == Scalar(Poly::monomial(BigInt(1), 1) + Poly(1)));
}
