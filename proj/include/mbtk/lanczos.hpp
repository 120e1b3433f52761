#pragma once
#include <functional>
#include <vector>

#include "mbtk/matrix.hpp"

namespace mbtk {

struct LanczosResult {
  double value = 0.0;
  std::vector<double> vector;
  int iterations = 0;
  double residual = 0.0;
};

/// Lowest eigenvalue of a symmetric operator by the Lanczos method with full
/// reorthogonalization. `apply` must compute y = A x for vectors of length n.
LanczosResult lanczos_lowest(
    const std::function<void(const double*, double*)>& apply, std::size_t n,
    const std::vector<double>& start, double tol = 1e-10, int max_iter = 600);

/// Convenience overload for a dense symmetric matrix. Runs twice from two
/// deterministic start vectors and keeps the lower Ritz value.
LanczosResult lanczos_lowest(const Matrix& a, double tol = 1e-10,
                             int max_iter = 600);

}  // namespace mbtk
