#ifndef PHONDUR_LINALG_HPP
#define PHONDUR_LINALG_HPP

#include <cstddef>
#include <vector>

namespace phondur::linalg {

// Dense row-major matrix of doubles.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
  void zero() { std::fill(a.begin(), a.end(), 0.0); }
  size_t size() const { return a.size(); }
};

// Thread count used by the OpenMP kernels. 0 means the OpenMP runtime
// default. Without OpenMP this is a no-op and everything runs serially.
void set_threads(int n);
int max_threads();

// GEMM kernels. C must be pre-sized; with accumulate=false C is
// overwritten, otherwise the product is added into it.
//
// The *_ref forms are the plain serial reference implementations. The
// unsuffixed forms parallelize over independent output rows but keep the
// same per-element accumulation order, so their results are bit-identical
// to the references for any thread count (tested in test_linalg).
void gemm_nn_ref(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate = false);
void gemm_nt_ref(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate = false);
void gemm_tn_ref(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate = false);
void gemm_nn(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate = false);  // C = A B
void gemm_nt(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate = false);  // C = A B'
void gemm_tn(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate = false);  // C = A' B

// In-place lower-triangular Cholesky A = L L'. Returns false if A is not
// positive definite. Only the lower triangle of A is referenced; on
// success the lower triangle holds L (upper left untouched garbage).
bool cholesky(Matrix& A);

// Solve L x = b (forward) / L' x = b (backward) in place, L lower.
void solve_lower(const Matrix& L, double* x);
void solve_lower_t(const Matrix& L, double* x);
// Same with an r x m right-hand-side matrix, solved column by column.
void solve_lower_mat(const Matrix& L, Matrix& B);
void solve_lower_t_mat(const Matrix& L, Matrix& B);

// log(det(L L')) = 2 * sum(log(diag(L)))
double chol_logdet(const Matrix& L);

// Inverse of L L' from its Cholesky factor (symmetric result).
Matrix chol_inverse(const Matrix& L);

double dot(const double* x, const double* y, int n);

}  // namespace phondur::linalg

#endif  // PHONDUR_LINALG_HPP
