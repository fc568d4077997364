// Compares the serial reference kernels against the OpenMP variants on
// random exact-arithmetic workloads and checks that both produce identical
// results. Run with --smoke for a fast correctness-only pass (used by ctest).

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "colorlie/liealg.hpp"
#include "colorlie/linalg.hpp"
#include "colorlie/uea.hpp"

using namespace colorlie;

namespace {

double now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  Poly p;
  for (int i = 0, d = deg(rng); i <= d; ++i)
    p = p + Poly::monomial(BigInt(num(rng)), i);
  if (p.is_zero()) p = Poly(1);
  return Scalar(p);
}

Mat random_matrix(std::mt19937_64& rng, int n, int density_pct) {
  std::uniform_int_distribution<int> pct(0, 99);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pct(rng) < density_pct) m.at(i, j) = random_scalar(rng);
  return m;
}

std::vector<Word> random_words(std::mt19937_64& rng, const ColorLieAlgebra& L, int count,
                               int len) {
  std::uniform_int_distribution<int> gen(0, L.dim() - 1);
  std::vector<Word> ws;
  for (int i = 0; i < count; ++i) {
    Word w;
    w.coeff = Scalar(1);
    for (int k = 0; k < len; ++k) w.gens.push_back(gen(rng));
    ws.push_back(std::move(w));
  }
  return ws;
}

struct Row {
  const char* name;
  double serial;
  double parallel;
  bool equal;
};

void print(const Row& r) {
  std::cout << r.name << ": serial " << r.serial << "s, parallel " << r.parallel << "s, speedup "
            << (r.parallel > 0 ? r.serial / r.parallel : 0.0)
            << (r.equal ? "" : "  ** RESULTS DIFFER **") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel variants run serially\n";
#endif
  std::mt19937_64 rng(20260809);
  bool all_equal = true;

  {
    int n = smoke ? 24 : 32;
    Mat m = random_matrix(rng, n, 60);
    double t0 = now();
    auto rs = kernels::rref_serial(m);
    double t1 = now();
    auto rp = kernels::rref_parallel(m);
    double t2 = now();
    Row row{"rref (bareiss)", t1 - t0, t2 - t1, rs.r == rp.r && rs.pivots == rp.pivots};
    all_equal = all_equal && row.equal;
    print(row);
    if (smoke) {
      // the fraction oracle swells on dense polynomial input; compare on a
      // size it can handle
      Mat small = random_matrix(rng, 10, 50);
      auto rb = kernels::rref_serial(small);
      auto rf = kernels::rref_fraction_reference(small);
      bool same = rf.r == rb.r && rf.pivots == rb.pivots;
      all_equal = all_equal && same;
      std::cout << "rref fraction oracle agrees: " << (same ? "yes" : "NO") << "\n";
    }
  }
  {
    int n = smoke ? 12 : 40;
    Mat a = random_matrix(rng, n, 80);
    Mat b = random_matrix(rng, n, 80);
    double t0 = now();
    Mat ms = kernels::mul_serial(a, b);
    double t1 = now();
    Mat mp = kernels::mul_parallel(a, b);
    double t2 = now();
    Row row{"matmul", t1 - t0, t2 - t1, ms == mp};
    all_equal = all_equal && row.equal;
    print(row);
  }
  {
    Presentation P(builtin_algebra("heisenberg"));
    auto words = random_words(rng, P.algebra(), smoke ? 50 : 1500, smoke ? 5 : 9);
    double t0 = now();
    std::vector<UEAElement> serial;
    for (const auto& w : words) serial.push_back(P.normalize(w));
    double t1 = now();
    auto batch = P.normalize_batch(words);
    double t2 = now();
    Row row{"normalize", t1 - t0, t2 - t1, serial == batch};
    all_equal = all_equal && row.equal;
    print(row);
  }
  if (!all_equal) {
    std::cout << "FAIL: serial and parallel kernels disagree\n";
    return 1;
  }
  std::cout << (smoke ? "smoke ok\n" : "ok\n");
  return 0;
}
