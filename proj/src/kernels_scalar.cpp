#include "mbtk/kernels.hpp"

#include <algorithm>
#include <cstring>

namespace mbtk::kern::scalar {

double dot(std::size_t n, const double* x, const double* y) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += x[i] * y[i];
    s1 += x[i + 1] * y[i + 1];
    s2 += x[i + 2] * y[i + 2];
    s3 += x[i + 3] * y[i + 3];
  }
  for (; i < n; ++i) s0 += x[i] * y[i];
  return (s0 + s1) + (s2 + s3);
}

void axpy(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(std::size_t n, double a, double* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void gemv(std::size_t m, std::size_t n, const double* A, std::size_t lda,
          const double* x, double* y) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) y[i] = dot(n, A + i * lda, x);
}

// Blocked i-k-j product; the j loop is a contiguous fused update that
// the compiler can vectorize without reassociating any reduction.
void gemm(std::size_t m, std::size_t n, std::size_t k,
          const double* A, std::size_t lda,
          const double* B, std::size_t ldb,
          double* C, std::size_t ldc) {
  constexpr std::size_t kc = 256;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) std::memset(C + i * ldc, 0, n * sizeof(double));
  for (std::size_t kk = 0; kk < k; kk += kc) {
    const std::size_t kend = std::min(k, kk + kc);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m; ++i) {
      double* ci = C + i * ldc;
      for (std::size_t p = kk; p < kend; ++p) {
        const double a = A[i * lda + p];
        if (a == 0.0) continue;
        const double* bp = B + p * ldb;
        for (std::size_t j = 0; j < n; ++j) ci[j] += a * bp[j];
      }
    }
  }
}

}  // namespace mbtk::kern::scalar
