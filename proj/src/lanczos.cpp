#include "mbtk/lanczos.hpp"

#include <cmath>
#include <stdexcept>

#include "mbtk/kernels.hpp"
#include "mbtk/sym_eig.hpp"

namespace mbtk {

LanczosResult lanczos_lowest(
    const std::function<void(const double*, double*)>& apply, std::size_t n,
    const std::vector<double>& start, double tol, int max_iter) {
  if (start.size() != n) throw std::invalid_argument("lanczos: start size");
  const int mmax = static_cast<int>(std::min<std::size_t>(max_iter, n));

  std::vector<std::vector<double>> basis;
  basis.reserve(mmax);
  std::vector<double> alpha, beta;  // beta[j] couples j and j+1

  std::vector<double> q = start;
  double nrm = norm2(q);
  if (nrm == 0.0) throw std::invalid_argument("lanczos: zero start vector");
  kern::scal(n, 1.0 / nrm, q.data());
  basis.push_back(q);

  std::vector<double> w(n);
  double theta_prev = 0.0;
  LanczosResult out;

  for (int j = 0; j < mmax; ++j) {
    apply(basis[j].data(), w.data());
    const double a = kern::dot(n, basis[j].data(), w.data());
    alpha.push_back(a);
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& v : basis) {
        const double c = kern::dot(n, v.data(), w.data());
        kern::axpy(n, -c, v.data(), w.data());
      }
    const double b = std::sqrt(kern::dot(n, w.data(), w.data()));

    EigenSystem tri = tridiag_eig(alpha, beta, true);
    const double theta = tri.values[0];
    const double sbot = tri.vectors(alpha.size() - 1, 0);
    const double resid = b * std::fabs(sbot);
    out.iterations = j + 1;
    out.residual = resid;
    if ((resid < tol && j > 2) || b < 1e-14 ||
        static_cast<std::size_t>(j) + 1 == n) {
      out.value = theta;
      out.vector.assign(n, 0.0);
      for (std::size_t i = 0; i < basis.size(); ++i)
        kern::axpy(n, tri.vectors(i, 0), basis[i].data(), out.vector.data());
      const double vn = norm2(out.vector);
      if (vn > 0) kern::scal(n, 1.0 / vn, out.vector.data());
      return out;
    }
    beta.push_back(b);
    kern::scal(n, 1.0 / b, w.data());
    basis.push_back(w);
    theta_prev = theta;
  }
  (void)theta_prev;
  throw std::runtime_error("lanczos: no convergence within iteration limit");
}

LanczosResult lanczos_lowest(const Matrix& a, double tol, int max_iter) {
  const std::size_t n = a.rows();
  auto apply = [&](const double* x, double* y) {
    kern::gemv(n, n, a.data(), n, x, y);
  };
  // Reference-determinant start plus a spread start; ground states of the
  // sector Hamiltonians overlap at least one of them.
  std::vector<double> s1(n, 0.0);
  s1[0] = 1.0;
  LanczosResult r1 = lanczos_lowest(apply, n, s1, tol, max_iter);
  std::vector<double> s2(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) s2[i] += 1e-3 * static_cast<double>(i % 7);
  LanczosResult r2 = lanczos_lowest(apply, n, s2, tol, max_iter);
  return r1.value <= r2.value ? r1 : r2;
}

}  // namespace mbtk
