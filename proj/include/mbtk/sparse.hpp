#pragma once
#include <cstdint>
#include <vector>

#include "mbtk/matrix.hpp"

namespace mbtk {

struct Triplet {
  std::int32_t row;
  std::int32_t col;
  double value;
};

/// Compressed sparse row matrix. Duplicate triplets are summed.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  CsrMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return col_.size(); }

  void matvec(const double* x, double* y) const;        // y = A x
  void matvec_add(const double* x, double* y) const;    // y += A x

  /// out = A * dense (row-axpy form; parallel over sparse rows).
  void times_dense(const Matrix& dense, Matrix& out) const;

  Matrix to_dense() const;

  const std::vector<std::int64_t>& rowptr() const { return rowptr_; }
  const std::vector<std::int32_t>& colidx() const { return col_; }
  std::vector<double>& values() { return val_; }
  const std::vector<double>& values() const { return val_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> rowptr_;
  std::vector<std::int32_t> col_;
  std::vector<double> val_;
};

}  // namespace mbtk
