#pragma once
#include <cstddef>

// Dense arithmetic kernels. Every routine has a scalar reference
// implementation and, on x86-64, an AVX2/FMA variant compiled in a
// separate translation unit. The active variant is chosen once at
// runtime from CPUID (override with MBTK_SIMD=scalar|avx2).
//
// All matrices are row-major. Parallel kernels partition work by
// output row only, so results are bitwise reproducible for a given
// instruction set regardless of thread count.

namespace mbtk::kern {

enum class Isa { scalar, avx2 };

Isa active_isa();
const char* isa_name(Isa isa);
// Test hook; returns false if the requested ISA is unavailable.
bool force_isa(Isa isa);

double dot(std::size_t n, const double* x, const double* y);
void axpy(std::size_t n, double a, const double* x, double* y);
void scal(std::size_t n, double a, double* x);

// y = A x, A is m-by-n with leading dimension lda.
void gemv(std::size_t m, std::size_t n, const double* A, std::size_t lda,
          const double* x, double* y);

// C = A B; A m-by-k, B k-by-n, C m-by-n. C is overwritten.
void gemm(std::size_t m, std::size_t n, std::size_t k,
          const double* A, std::size_t lda,
          const double* B, std::size_t ldb,
          double* C, std::size_t ldc);

namespace scalar {
double dot(std::size_t n, const double* x, const double* y);
void axpy(std::size_t n, double a, const double* x, double* y);
void scal(std::size_t n, double a, double* x);
void gemv(std::size_t m, std::size_t n, const double* A, std::size_t lda,
          const double* x, double* y);
void gemm(std::size_t m, std::size_t n, std::size_t k,
          const double* A, std::size_t lda,
          const double* B, std::size_t ldb,
          double* C, std::size_t ldc);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define MBTK_X86_64 1
namespace avx2 {
double dot(std::size_t n, const double* x, const double* y);
void axpy(std::size_t n, double a, const double* x, double* y);
void scal(std::size_t n, double a, double* x);
void gemv(std::size_t m, std::size_t n, const double* A, std::size_t lda,
          const double* x, double* y);
void gemm(std::size_t m, std::size_t n, std::size_t k,
          const double* A, std::size_t lda,
          const double* B, std::size_t ldb,
          double* C, std::size_t ldc);
}  // namespace avx2
#endif

}  // namespace mbtk::kern
