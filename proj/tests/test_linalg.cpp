#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "colorlie/error.hpp"
#include "colorlie/linalg.hpp"

using namespace colorlie;

namespace {

unsigned long test_seed() {
  const char* s = std::getenv("COLORLIE_SEED");
  return s ? std::stoul(s) : 0xC0105EEDUL;
}

Scalar rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  std::uniform_int_distribution<int> k(0, 2);
  return Scalar(v(rng)) * Scalar::q_power(k(rng));
}

Mat random_matrix(std::mt19937_64& rng, int r, int c) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rnd(rng);
  return m;
}

}  // namespace

TEST_CASE("rref of a known matrix") {
  // [[1, q], [q^-1, 1]] has rank 1 (rows proportional)
  Mat m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar::q_power(1);
  m.at(1, 0) = Scalar::q_power(-1);
  m.at(1, 1) = Scalar(1);
  auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.r.at(0, 0) == Scalar(1));
  CHECK(r.r.at(0, 1) == Scalar::q_power(1));
  CHECK(r.r.at(1, 0).is_zero());
  CHECK(r.r.at(1, 1).is_zero());
}

TEST_CASE("null space vectors satisfy m x = 0 and bases are canonical") {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 50; ++t) {
    Mat m = random_matrix(rng, 5, 7);
    Mat ns = null_space(m);
    CHECK(ns.rows() == 7 - rank(m));
    for (int r = 0; r < ns.rows(); ++r)
      for (int i = 0; i < m.rows(); ++i) {
        Scalar acc(0);
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * ns.at(r, j);
        CHECK(acc.is_zero());
      }
    // scrambling the spanning set leaves the canonical basis unchanged
    Mat scrambled(ns.rows(), ns.cols());
    for (int r = 0; r < ns.rows(); ++r) {
      Scalar f = Scalar(2) + Scalar(r);
      int other = (r + 1) % ns.rows();
      for (int j = 0; j < ns.cols(); ++j)
        scrambled.at(r, j) = f * ns.at(r, j) + ns.at(other, j);
    }
    if (ns.rows() > 1) CHECK(row_space(scrambled) == ns);
  }
}

TEST_CASE("determinant") {
  Mat m(2, 2);
  m.at(0, 0) = Scalar(0);
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(1);
  m.at(1, 1) = Scalar(0);
  CHECK(det(m) == Scalar(-1));
  Mat s(2, 2);
  s.at(0, 0) = Scalar::q_power(1);
  s.at(1, 1) = Scalar::q_power(-1);
  CHECK(det(s) == Scalar(1));
  CHECK_THROWS_AS(det(Mat(2, 3)), PreconditionError);
}

TEST_CASE("solve") {
  std::mt19937_64 rng(test_seed());
  Mat m = random_matrix(rng, 4, 4);
  std::vector<Scalar> x0{Scalar(1), Scalar(-2), Scalar::q_power(1), Scalar(0)};
  std::vector<Scalar> b(4, Scalar(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b[static_cast<size_t>(i)] += m.at(i, j) * x0[static_cast<size_t>(j)];
  std::vector<Scalar> x;
  REQUIRE(solve(m, b, x));
  for (int i = 0; i < 4; ++i) {
    Scalar acc(0);
    for (int j = 0; j < 4; ++j) acc += m.at(i, j) * x[static_cast<size_t>(j)];
    CHECK(acc == b[static_cast<size_t>(i)]);
  }
  // inconsistent system
  Mat z(2, 2);
  std::vector<Scalar> rhs{Scalar(1), Scalar(1)};
  CHECK(!solve(z, rhs, x));
}

TEST_CASE("Bareiss, parallel Bareiss and the fraction oracle all agree") {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 10; ++t) {
    Mat m = random_matrix(rng, 8 + t % 4, 7 + t % 5);
    auto s = kernels::rref_serial(m);
    auto p = kernels::rref_parallel(m);
    auto f = kernels::rref_fraction_reference(m);
    CHECK(s.r == p.r);
    CHECK(s.pivots == p.pivots);
    CHECK(s.rank == p.rank);
    // independent oracle: naive fraction arithmetic; RREF is unique
    CHECK(s.r == f.r);
    CHECK(s.pivots == f.pivots);
    Mat a = random_matrix(rng, 9, 11), b = random_matrix(rng, 11, 8);
    CHECK(kernels::mul_serial(a, b) == kernels::mul_parallel(a, b));
  }
  // rank-deficient input with repeated and zero rows
  Mat m(6, 5);
  std::mt19937_64 rng2(test_seed());
  for (int j = 0; j < 5; ++j) {
    m.at(0, j) = rnd(rng2);
    m.at(2, j) = m.at(0, j) * Scalar::q_power(1);
    m.at(4, j) = m.at(0, j) + m.at(2, j);
  }
  auto s = kernels::rref_serial(m);
  auto f = kernels::rref_fraction_reference(m);
  CHECK(s.rank == 1);
  CHECK(s.r == f.r);
  // the dispatch modes agree as well
  Mat big = random_matrix(rng, 20, 20);
  set_parallel_mode(ParallelMode::ForceSerial);
  auto ds = rref(big);
  set_parallel_mode(ParallelMode::ForceParallel);
  auto dp = rref(big);
  set_parallel_mode(ParallelMode::Auto);
  CHECK(ds.r == dp.r);
}

TEST_CASE("degenerate shapes are legal") {
  Mat empty_rows(0, 4);
  CHECK(rank(empty_rows) == 0);
  CHECK(null_space(empty_rows).rows() == 4);
  Mat empty_cols(3, 0);
  CHECK(rank(empty_cols) == 0);
  CHECK(null_space(empty_cols).rows() == 0);
  CHECK((Mat(0, 0) * Mat(0, 0)).rows() == 0);
  CHECK(row_space(Mat(0, 5)).rows() == 0);
}
