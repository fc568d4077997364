#include "colorlie/linalg.hpp"

#include <atomic>

#include "colorlie/error.hpp"

namespace colorlie {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch in +");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {
std::atomic<ParallelMode> g_mode{ParallelMode::Auto};

bool use_parallel(long work) {
  switch (parallel_mode()) {
    case ParallelMode::ForceSerial: return false;
    case ParallelMode::ForceParallel: return true;
    case ParallelMode::Auto: break;
  }
#ifdef _OPENMP
  return work >= 1024;
#else
  (void)work;
  return false;
#endif
}
}  // namespace

void set_parallel_mode(ParallelMode mode) { g_mode.store(mode); }
ParallelMode parallel_mode() { return g_mode.load(); }

Mat Mat::operator*(const Mat& o) const {
  long work = static_cast<long>(rows_) * o.cols() * cols_;
  return use_parallel(work) ? kernels::mul_parallel(*this, o) : kernels::mul_serial(*this, o);
}

namespace kernels {

Mat mul_serial(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix shape mismatch in *");
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

Mat mul_parallel(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix shape mismatch in *");
  Mat r(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

namespace {

// Rows cleared of denominators; row scalings do not change the RREF.
using PolyMat = std::vector<std::vector<Poly>>;

PolyMat clear_denominators(const Mat& m) {
  PolyMat p(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Poly lcm(1);
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& d = m.at(i, j).den();
      Poly g = Poly::gcd(lcm, d);
      lcm = lcm.div_exact(g) * d;
    }
    p[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j)
      p[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m.at(i, j).num() * lcm.div_exact(m.at(i, j).den());
  }
  return p;
}

// One-step fraction-free Gauss-Jordan (Bareiss): every entry stays a minor
// of the cleared matrix and the division by the previous pivot is exact.
// After the sweep each pivot row carries the final pivot value, so the RREF
// is obtained by one scalar division per row.
template <bool Parallel>
RrefResult bareiss_rref(const Mat& input) {
  PolyMat a = clear_denominators(input);
  int rows = input.rows(), cols = input.cols();
  RrefResult res;
  std::vector<int> pivot_row;  // index of the row holding pivot k
  Poly prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(r)]);
    const auto& prow = a[static_cast<size_t>(r)];
    Poly p = prow[static_cast<size_t>(c)];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel)
#endif
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = a[static_cast<size_t>(i)];
      const Poly f = row[static_cast<size_t>(c)];
      for (int j = 0; j < cols; ++j) {
        Poly t = p * row[static_cast<size_t>(j)] - f * prow[static_cast<size_t>(j)];
        row[static_cast<size_t>(j)] = t.div_exact(prev);
      }
    }
    prev = p;
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.r = Mat(rows, cols);
  for (int i = 0; i < r; ++i) {
    Scalar pivval(a[static_cast<size_t>(i)][static_cast<size_t>(res.pivots[static_cast<size_t>(i)])]);
    Scalar inv = pivval.inverse();
    for (int j = 0; j < cols; ++j) {
      const Poly& e = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!e.is_zero()) res.r.at(i, j) = Scalar(e) * inv;
    }
  }
  return res;
}

}  // namespace

RrefResult rref_serial(Mat m) { return bareiss_rref<false>(m); }
RrefResult rref_parallel(Mat m) { return bareiss_rref<true>(m); }

// Naive fraction-arithmetic row reduction. Slow on dense polynomial input
// (gcd per operation) but independent of the Bareiss path; kept as the test
// oracle. RREF is unique, so results must agree entry for entry.
RrefResult rref_fraction_reference(Mat m) {
  RrefResult res;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.r = std::move(m);
  return res;
}

}  // namespace kernels

RrefResult rref(Mat m) {
  long work = static_cast<long>(m.rows()) * m.cols();
  return use_parallel(work) ? kernels::rref_parallel(std::move(m))
                            : kernels::rref_serial(std::move(m));
}

int rank(const Mat& m) { return rref(m).rank; }

Scalar det(Mat m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  Scalar d(1);
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

Mat row_space(const Mat& m) {
  RrefResult rr = rref(m);
  Mat out(rr.rank, m.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = rr.r.at(i, j);
  return out;
}

Mat null_space(const Mat& m) {
  RrefResult rr = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
  int free_count = n - rr.rank;
  Mat basis(free_count, n);
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    basis.at(row, f) = Scalar(1);
    for (int p = 0; p < rr.rank; ++p) basis.at(row, rr.pivots[static_cast<size_t>(p)]) = -rr.r.at(p, f);
    ++row;
  }
  return row_space(basis);
}

bool solve(const Mat& m, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
  if (static_cast<int>(b.size()) != m.rows()) throw PreconditionError("rhs size mismatch in solve");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
  }
  RrefResult rr = rref(aug);
  x.assign(static_cast<size_t>(m.cols()), Scalar(0));
  for (int p = 0; p < rr.rank; ++p) {
    int c = rr.pivots[static_cast<size_t>(p)];
    if (c == m.cols()) return false;  // pivot in the rhs column: inconsistent
    x[static_cast<size_t>(c)] = rr.r.at(p, m.cols());
  }
  return true;
}

}  // namespace colorlie
