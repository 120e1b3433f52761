#include "mbtk/sparse.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "mbtk/kernels.hpp"

namespace mbtk {

CsrMatrix::CsrMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  rowptr_.assign(rows_ + 1, 0);
  col_.reserve(triplets.size());
  val_.reserve(triplets.size());
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    col_.push_back(triplets[i].col);
    val_.push_back(sum);
    ++rowptr_[triplets[i].row + 1];
    i = j;
  }
  for (std::size_t r = 0; r < rows_; ++r) rowptr_[r + 1] += rowptr_[r];
}

void CsrMatrix::matvec(const double* x, double* y) const {
  std::memset(y, 0, rows_ * sizeof(double));
  matvec_add(x, y);
}

void CsrMatrix::matvec_add(const double* x, double* y) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::int64_t p = rowptr_[i]; p < rowptr_[i + 1]; ++p)
      s += val_[p] * x[col_[p]];
    y[i] += s;
  }
}

void CsrMatrix::times_dense(const Matrix& dense, Matrix& out) const {
  if (dense.rows() != cols_) throw std::invalid_argument("times_dense: shape");
  if (out.rows() != rows_ || out.cols() != dense.cols())
    out = Matrix(rows_, dense.cols());
  const std::size_t w = dense.cols();
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < rows_; ++i) {
    double* oi = out.row(i);
    std::memset(oi, 0, w * sizeof(double));
    for (std::int64_t p = rowptr_[i]; p < rowptr_[i + 1]; ++p)
      kern::axpy(w, val_[p], dense.row(col_[p]), oi);
  }
}

Matrix CsrMatrix::to_dense() const {
  Matrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::int64_t p = rowptr_[i]; p < rowptr_[i + 1]; ++p)
      d(i, col_[p]) += val_[p];
  return d;
}

}  // namespace mbtk
