#ifndef COLORLIE_LINALG_HPP
#define COLORLIE_LINALG_HPP

#include <vector>

#include "colorlie/scalar.hpp"

namespace colorlie {

/// Dense matrix over Q(q), row major. All computations are exact; rank,
/// kernels and canonical bases never involve tolerances.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const = default;
  bool is_zero() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Mat r;
  std::vector<int> pivots;
  int rank = 0;
};

/// Parallel-dispatch policy for the kernels below. Auto switches to the
/// OpenMP path once a matrix is big enough to amortize thread start-up.
enum class ParallelMode { Auto, ForceSerial, ForceParallel };
void set_parallel_mode(ParallelMode mode);
ParallelMode parallel_mode();

RrefResult rref(Mat m);
int rank(const Mat& m);
Scalar det(Mat m);  // square input

/// Canonical basis of the row space: nonzero RREF rows. Two subspaces are
/// equal iff these matrices are equal.
Mat row_space(const Mat& m);
/// Canonical basis of {x : m x = 0}, rows of the result, RREF-canonical.
Mat null_space(const Mat& m);

/// Least structure needed by callers solving small systems: returns x with
/// m x = b, or empty if inconsistent (x as a column count check).
bool solve(const Mat& m, const std::vector<Scalar>& b, std::vector<Scalar>& x);

/// Serial and OpenMP implementations, kept separately so tests and the
/// benchmark can compare them on identical inputs. The production paths use
/// fraction-free (Bareiss) elimination: rows are cleared to Z[q] and every
/// division is exact, which avoids the gcd swell of naive fraction
/// arithmetic. rref_fraction_reference is that naive algorithm, kept as an
/// independent oracle; RREF is unique, so all three must agree exactly.
namespace kernels {
RrefResult rref_serial(Mat m);
RrefResult rref_parallel(Mat m);
RrefResult rref_fraction_reference(Mat m);
Mat mul_serial(const Mat& a, const Mat& b);
Mat mul_parallel(const Mat& a, const Mat& b);
}  // namespace kernels

}  // namespace colorlie

#endif
