#include "mbtk/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mbtk::kern {

namespace {

bool avx2_supported() {
#if defined(MBTK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("MBTK_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Isa::avx2;
  }
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

Isa g_isa = detect();

}  // namespace

Isa active_isa() { return g_isa; }

const char* isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported()) return false;
  g_isa = isa;
  return true;
}

double dot(std::size_t n, const double* x, const double* y) {
#if defined(MBTK_HAVE_AVX2)
  if (g_isa == Isa::avx2) return avx2::dot(n, x, y);
#endif
  return scalar::dot(n, x, y);
}

void axpy(std::size_t n, double a, const double* x, double* y) {
#if defined(MBTK_HAVE_AVX2)
  if (g_isa == Isa::avx2) return avx2::axpy(n, a, x, y);
#endif
  scalar::axpy(n, a, x, y);
}

void scal(std::size_t n, double a, double* x) {
#if defined(MBTK_HAVE_AVX2)
  if (g_isa == Isa::avx2) return avx2::scal(n, a, x);
#endif
  scalar::scal(n, a, x);
}

void gemv(std::size_t m, std::size_t n, const double* A, std::size_t lda,
          const double* x, double* y) {
#if defined(MBTK_HAVE_AVX2)
  if (g_isa == Isa::avx2) return avx2::gemv(m, n, A, lda, x, y);
#endif
  scalar::gemv(m, n, A, lda, x, y);
}

void gemm(std::size_t m, std::size_t n, std::size_t k,
          const double* A, std::size_t lda,
          const double* B, std::size_t ldb,
          double* C, std::size_t ldc) {
#if defined(MBTK_HAVE_AVX2)
  if (g_isa == Isa::avx2) return avx2::gemm(m, n, k, A, lda, B, ldb, C, ldc);
#endif
  scalar::gemm(m, n, k, A, lda, B, ldb, C, ldc);
}

}  // namespace mbtk::kern
