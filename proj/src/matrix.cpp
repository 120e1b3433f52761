#include "mbtk/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "mbtk/kernels.hpp"

namespace mbtk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  kern::gemm(a.rows(), b.cols(), a.cols(), a.data(), a.cols(), b.data(), b.cols(),
             c.data(), c.cols());
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  constexpr std::size_t bs = 64;
  for (std::size_t ii = 0; ii < a.rows(); ii += bs)
    for (std::size_t jj = 0; jj < a.cols(); jj += bs)
      for (std::size_t i = ii; i < std::min(a.rows(), ii + bs); ++i)
        for (std::size_t j = jj; j < std::min(a.cols(), jj + bs); ++j)
          t(j, i) = a(i, j);
  return t;
}

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: shape mismatch");
  std::vector<double> y(a.rows());
  kern::gemv(a.rows(), a.cols(), a.data(), a.cols(), x.data(), y.data());
  return y;
}

void add_scaled(Matrix& a, double s, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add_scaled: shape mismatch");
  kern::axpy(a.rows() * a.cols(), s, b.data(), a.data());
}

void symmetrize(Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  const double* p = a.data();
  for (std::size_t i = 0, e = a.rows() * a.cols(); i < e; ++i)
    m = std::max(m, std::fabs(p[i]));
  return m;
}

double max_asymmetry(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      m = std::max(m, std::fabs(a(i, j) - a(j, i)));
  return m;
}

double one_norm(const Matrix& a) {
  std::vector<double> colsum(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) colsum[j] += std::fabs(a(i, j));
  double m = 0.0;
  for (double v : colsum) m = std::max(m, v);
  return m;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  return kern::dot(std::min(x.size(), y.size()), x.data(), y.data());
}

double norm2(const std::vector<double>& x) {
  return std::sqrt(kern::dot(x.size(), x.data(), x.data()));
}

}  // namespace mbtk
