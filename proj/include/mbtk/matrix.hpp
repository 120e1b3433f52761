#pragma once
#include <cstddef>
#include <vector>

namespace mbtk {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }
  double* row(std::size_t i) { return a_.data() + i * cols_; }
  const double* row(std::size_t i) const { return a_.data() + i * cols_; }

  void fill(double v) { a_.assign(a_.size(), v); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::vector<double> multiply(const Matrix& a, const std::vector<double>& x);

void add_scaled(Matrix& a, double s, const Matrix& b);  // a += s*b
void symmetrize(Matrix& a);                             // a = (a + a^T)/2
double max_abs(const Matrix& a);
double max_asymmetry(const Matrix& a);  // max |a_ij - a_ji|
double one_norm(const Matrix& a);       // max column sum of |a_ij|

double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);

}  // namespace mbtk
