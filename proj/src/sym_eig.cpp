#include "mbtk/sym_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mbtk {

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form.
// On exit d holds the diagonal and e[i] the coupling between i and i+1.
// When vectors are accumulated, z is overwritten with the orthogonal Q
// such that A = Q T Q^T.
void householder_tridiag(Matrix& z, std::vector<double>& d,
                         std::vector<double>& e, bool vectors) {
  const std::size_t n = z.rows();
  std::vector<double> esh(n, 0.0);  // e shifted: esh[i] couples i-1 and i

  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(z(i, k));
      if (scale == 0.0) {
        esh[i] = z(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        esh[i] = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          if (vectors) z(j, i) = z(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          esh[j] = g / h;
          f += esh[j] * z(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = z(i, j);
          g = esh[j] - hh * f;
          esh[j] = g;
          for (std::size_t k = 0; k <= j; ++k)
            z(j, k) -= f * esh[k] + g * z(i, k);
        }
      }
    } else {
      esh[i] = z(i, l);
    }
    d[i] = h;
  }

  if (vectors) d[0] = 0.0;
  esh[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors) {
      if (d[i] != 0.0) {
        for (std::size_t j = 0; j < i; ++j) {
          double g = 0.0;
          for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
          for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
        }
      }
      d[i] = z(i, i);
      z(i, i) = 1.0;
      for (std::size_t j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
    } else {
      d[i] = z(i, i);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = esh[i + 1];
}

// Implicit-shift QL on a tridiagonal (d, e); e[i] couples i and i+1.
// Rotations are accumulated into z columns when it is non-empty.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  const bool vectors = z.rows() == n;
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> ee(e);
  ee.resize(n, 0.0);

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(ee[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 80) throw std::runtime_error("sym_eig: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * ee[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + ee[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * ee[i];
          const double b = c * ee[i];
          r = std::hypot(f, g);
          ee[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            ee[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (vectors) {
            for (std::size_t k = 0; k < n; ++k) {
              f = z(k, i + 1);
              z(k, i + 1) = s * z(k, i) + c * f;
              z(k, i) = c * z(k, i) - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        ee[l] = g;
        ee[m] = 0.0;
      }
    } while (m != l);
  }
}

EigenSystem sort_ascending(std::vector<double>& d, Matrix& z, bool vectors) {
  const std::size_t n = d.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  EigenSystem out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = d[perm[k]];
  if (vectors) {
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = z(i, perm[k]);
  }
  return out;
}

}  // namespace

EigenSystem sym_eig(const Matrix& a, bool want_vectors) {
  if (a.rows() != a.cols()) throw std::invalid_argument("sym_eig: not square");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  Matrix z = a;
  std::vector<double> d(n, 0.0), e(n > 1 ? n - 1 : 0, 0.0);
  householder_tridiag(z, d, e, want_vectors);
  Matrix empty;
  ql_implicit(d, e, want_vectors ? z : empty);
  return sort_ascending(d, z, want_vectors);
}

EigenSystem tridiag_eig(std::vector<double> diag, std::vector<double> sub,
                        bool want_vectors) {
  const std::size_t n = diag.size();
  Matrix z;
  if (want_vectors) z = Matrix::identity(n);
  sub.resize(n > 1 ? n - 1 : 0, 0.0);
  ql_implicit(diag, sub, z);
  return sort_ascending(diag, z, want_vectors);
}

}  // namespace mbtk
