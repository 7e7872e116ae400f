#include "phondur/linalg.hpp"

#include <cmath>
#include <cstring>

#include "phondur/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phondur::linalg {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
  g_threads = n;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
#ifdef _OPENMP
  return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

static void check_dims(int ar, int ac, int br, int bc, int cr, int cc,
                       int k_a, int k_b, const char* what) {
  if (k_a != k_b || ar != cr || bc != cc)
    throw ValidationError(std::string("gemm dimension mismatch in ") + what);
  (void)ac;
  (void)br;
}

// C(i,:) accumulated over k in ascending order; identical order in the
// parallel form, which only splits the independent i loop.
void gemm_nn_ref(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate) {
  check_dims(A.rows, A.cols, B.rows, B.cols, C.rows, C.cols, A.cols, B.rows, "nn");
  if (!accumulate) C.zero();
  for (int i = 0; i < A.rows; ++i) {
    const double* a = A.row(i);
    double* c = C.row(i);
    for (int k = 0; k < A.cols; ++k) {
      double av = a[k];
      const double* b = B.row(k);
      for (int j = 0; j < B.cols; ++j) c[j] += av * b[j];
    }
  }
}

void gemm_nn(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate) {
  check_dims(A.rows, A.cols, B.rows, B.cols, C.rows, C.cols, A.cols, B.rows, "nn");
  if (!accumulate) C.zero();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < A.rows; ++i) {
    const double* a = A.row(i);
    double* c = C.row(i);
    for (int k = 0; k < A.cols; ++k) {
      double av = a[k];
      const double* b = B.row(k);
      for (int j = 0; j < B.cols; ++j) c[j] += av * b[j];
    }
  }
}

// C = A B', rows of A dotted with rows of B.
void gemm_nt_ref(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate) {
  check_dims(A.rows, A.cols, B.rows, B.cols, C.rows, C.cols, A.cols, B.cols, "nt");
  if (!accumulate) C.zero();
  for (int i = 0; i < A.rows; ++i) {
    const double* a = A.row(i);
    double* c = C.row(i);
    for (int j = 0; j < B.rows; ++j) c[j] += dot(a, B.row(j), A.cols);
  }
}

void gemm_nt(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate) {
  check_dims(A.rows, A.cols, B.rows, B.cols, C.rows, C.cols, A.cols, B.cols, "nt");
  if (!accumulate) C.zero();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < A.rows; ++i) {
    const double* a = A.row(i);
    double* c = C.row(i);
    for (int j = 0; j < B.rows; ++j) c[j] += dot(a, B.row(j), A.cols);
  }
}

// C = A' B; C(i,:) = sum_k A(k,i) * B(k,:), k ascending.
void gemm_tn_ref(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate) {
  check_dims(A.rows, A.cols, B.rows, B.cols, C.rows, C.cols, A.rows, B.rows, "tn");
  if (!accumulate) C.zero();
  for (int i = 0; i < A.cols; ++i) {
    double* c = C.row(i);
    for (int k = 0; k < A.rows; ++k) {
      double av = A(k, i);
      const double* b = B.row(k);
      for (int j = 0; j < B.cols; ++j) c[j] += av * b[j];
    }
  }
}

void gemm_tn(const Matrix& A, const Matrix& B, Matrix& C, bool accumulate) {
  check_dims(A.rows, A.cols, B.rows, B.cols, C.rows, C.cols, A.rows, B.rows, "tn");
  if (!accumulate) C.zero();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < A.cols; ++i) {
    double* c = C.row(i);
    for (int k = 0; k < A.rows; ++k) {
      double av = A(k, i);
      const double* b = B.row(k);
      for (int j = 0; j < B.cols; ++j) c[j] += av * b[j];
    }
  }
}

double dot(const double* x, const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

bool cholesky(Matrix& A) {
  if (A.rows != A.cols) throw ValidationError("cholesky: matrix not square");
  int n = A.rows;
  for (int j = 0; j < n; ++j) {
    double d = A(j, j) - dot(A.row(j), A.row(j), j);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    d = std::sqrt(d);
    A(j, j) = d;
    for (int i = j + 1; i < n; ++i) {
      A(i, j) = (A(i, j) - dot(A.row(i), A.row(j), j)) / d;
    }
  }
  return true;
}

void solve_lower(const Matrix& L, double* x) {
  int n = L.rows;
  for (int i = 0; i < n; ++i) {
    x[i] = (x[i] - dot(L.row(i), x, i)) / L(i, i);
  }
}

void solve_lower_t(const Matrix& L, double* x) {
  int n = L.rows;
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int k = i + 1; k < n; ++k) s -= L(k, i) * x[k];
    x[i] = s / L(i, i);
  }
}

void solve_lower_mat(const Matrix& L, Matrix& B) {
  int n = L.rows;
  if (B.rows != n) throw ValidationError("solve_lower_mat: dimension mismatch");
  // forward substitution applied to all columns at once, row by row
  for (int i = 0; i < n; ++i) {
    double* bi = B.row(i);
    for (int k = 0; k < i; ++k) {
      double l = L(i, k);
      if (l == 0.0) continue;
      const double* bk = B.row(k);
      for (int j = 0; j < B.cols; ++j) bi[j] -= l * bk[j];
    }
    double d = L(i, i);
    for (int j = 0; j < B.cols; ++j) bi[j] /= d;
  }
}

void solve_lower_t_mat(const Matrix& L, Matrix& B) {
  int n = L.rows;
  if (B.rows != n) throw ValidationError("solve_lower_t_mat: dimension mismatch");
  for (int i = n - 1; i >= 0; --i) {
    double* bi = B.row(i);
    for (int k = i + 1; k < n; ++k) {
      double l = L(k, i);
      if (l == 0.0) continue;
      const double* bk = B.row(k);
      for (int j = 0; j < B.cols; ++j) bi[j] -= l * bk[j];
    }
    double d = L(i, i);
    for (int j = 0; j < B.cols; ++j) bi[j] /= d;
  }
}

double chol_logdet(const Matrix& L) {
  double s = 0.0;
  for (int i = 0; i < L.rows; ++i) s += std::log(L(i, i));
  return 2.0 * s;
}

Matrix chol_inverse(const Matrix& L) {
  int n = L.rows;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1.0;
  solve_lower_mat(L, inv);
  solve_lower_t_mat(L, inv);
  return inv;
}

}  // namespace phondur::linalg
