#pragma once
#include <vector>

#include "mbtk/matrix.hpp"

namespace mbtk {

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error on a numerically singular pivot.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

Matrix invert(const Matrix& a);

/// One-norm condition estimate via the explicit inverse (small systems only).
double cond_one(const Matrix& a);

}  // namespace mbtk
