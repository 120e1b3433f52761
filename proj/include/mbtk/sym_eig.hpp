#pragma once
#include <vector>

#include "mbtk/matrix.hpp"

namespace mbtk {

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]; empty if not requested
};

/// Dense symmetric eigensolver: Householder tridiagonalization followed by
/// implicit-shift QL. Eigenvalues are returned in ascending order.
EigenSystem sym_eig(const Matrix& a, bool want_vectors);

/// Eigenvalues/vectors of a symmetric tridiagonal matrix given its diagonal
/// and subdiagonal (sub[i] couples i and i+1). Used by the Lanczos solver.
EigenSystem tridiag_eig(std::vector<double> diag, std::vector<double> sub,
                        bool want_vectors);

}  // namespace mbtk
