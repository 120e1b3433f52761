#include "mbtk/kernels.hpp"

#if defined(MBTK_X86_64) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <algorithm>
#include <cstring>
#include <vector>

namespace mbtk::kern::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// GEBP blocking: B is repacked into kc-deep panels of 8 columns so the
// microkernel streams it contiguously.
constexpr std::size_t KC = 256;
constexpr std::size_t NC = 504;  // multiple of 8

// C[0..mr)[0..jn) += A(4 rows, kc deep) * Bp(one packed 8-wide panel)
inline void micro_4x8(std::size_t kc, std::size_t mr, std::size_t jn,
                      const double* a0, const double* a1, const double* a2,
                      const double* a3, const double* bp, double* c,
                      std::size_t ldc) {
  __m256d acc[4][2];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) acc[i][j] = _mm256_setzero_pd();
  for (std::size_t p = 0; p < kc; ++p) {
    const __m256d b0 = _mm256_loadu_pd(bp + 8 * p);
    const __m256d b1 = _mm256_loadu_pd(bp + 8 * p + 4);
    __m256d av;
    av = _mm256_set1_pd(a0[p]);
    acc[0][0] = _mm256_fmadd_pd(av, b0, acc[0][0]);
    acc[0][1] = _mm256_fmadd_pd(av, b1, acc[0][1]);
    if (mr > 1) {
      av = _mm256_set1_pd(a1[p]);
      acc[1][0] = _mm256_fmadd_pd(av, b0, acc[1][0]);
      acc[1][1] = _mm256_fmadd_pd(av, b1, acc[1][1]);
    }
    if (mr > 2) {
      av = _mm256_set1_pd(a2[p]);
      acc[2][0] = _mm256_fmadd_pd(av, b0, acc[2][0]);
      acc[2][1] = _mm256_fmadd_pd(av, b1, acc[2][1]);
    }
    if (mr > 3) {
      av = _mm256_set1_pd(a3[p]);
      acc[3][0] = _mm256_fmadd_pd(av, b0, acc[3][0]);
      acc[3][1] = _mm256_fmadd_pd(av, b1, acc[3][1]);
    }
  }
  double buf[8];
  for (std::size_t i = 0; i < mr; ++i) {
    _mm256_storeu_pd(buf, acc[i][0]);
    _mm256_storeu_pd(buf + 4, acc[i][1]);
    double* ci = c + i * ldc;
    for (std::size_t j = 0; j < jn; ++j) ci[j] += buf[j];
  }
}

}  // namespace

double dot(std::size_t n, const double* x, const double* y) {
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  __m256d s2 = _mm256_setzero_pd(), s3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), s0);
    s1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), s1);
    s2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), s2);
    s3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), s3);
  }
  for (; i + 4 <= n; i += 4)
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), s0);
  double s = hsum(_mm256_add_pd(_mm256_add_pd(s0, s1), _mm256_add_pd(s2, s3)));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(std::size_t n, double a, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i + 4),
                                                _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal(std::size_t n, double a, double* x) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void gemv(std::size_t m, std::size_t n, const double* A, std::size_t lda,
          const double* x, double* y) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) y[i] = dot(n, A + i * lda, x);
}

void gemm(std::size_t m, std::size_t n, std::size_t k,
          const double* A, std::size_t lda,
          const double* B, std::size_t ldb,
          double* C, std::size_t ldc) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) std::memset(C + i * ldc, 0, n * sizeof(double));

  std::vector<double> pack(KC * NC);
  for (std::size_t jj = 0; jj < n; jj += NC) {
    const std::size_t nc = std::min(NC, n - jj);
    const std::size_t npanels = (nc + 7) / 8;
    for (std::size_t kk = 0; kk < k; kk += KC) {
      const std::size_t kc = std::min(KC, k - kk);
      // pack B[kk..kk+kc) x [jj..jj+nc) into 8-wide panels, zero-padded
#pragma omp parallel for schedule(static)
      for (std::size_t jb = 0; jb < npanels; ++jb) {
        double* dst = pack.data() + jb * 8 * kc;
        const std::size_t jcount = std::min<std::size_t>(8, nc - jb * 8);
        for (std::size_t p = 0; p < kc; ++p) {
          const double* src = B + (kk + p) * ldb + jj + jb * 8;
          for (std::size_t j = 0; j < jcount; ++j) dst[8 * p + j] = src[j];
          for (std::size_t j = jcount; j < 8; ++j) dst[8 * p + j] = 0.0;
        }
      }
#pragma omp parallel for schedule(static)
      for (std::size_t ii = 0; ii < m; ii += 4) {
        const std::size_t mr = std::min<std::size_t>(4, m - ii);
        const double* a0 = A + ii * lda + kk;
        const double* a1 = A + (ii + (mr > 1 ? 1 : 0)) * lda + kk;
        const double* a2 = A + (ii + (mr > 2 ? 2 : 0)) * lda + kk;
        const double* a3 = A + (ii + (mr > 3 ? 3 : 0)) * lda + kk;
        for (std::size_t jb = 0; jb < npanels; ++jb) {
          const std::size_t jn = std::min<std::size_t>(8, nc - jb * 8);
          micro_4x8(kc, mr, jn, a0, a1, a2, a3, pack.data() + jb * 8 * kc,
                    C + ii * ldc + jj + jb * 8, ldc);
        }
      }
    }
  }
}

}  // namespace mbtk::kern::avx2

#endif  // MBTK_X86_64 && __AVX2__ && __FMA__
