#include "mbtk/integrals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mbtk {

double boys(int m, double x) {
  if (m < 0) throw std::invalid_argument("boys: negative order");
  if (x < 0.0) throw std::invalid_argument("boys: negative argument");
  constexpr double pi = std::numbers::pi;
  if (x < 35.0) {
    // upward-term series; each term positive, no cancellation
    double term = 1.0 / (2.0 * m + 1.0);
    double sum = term;
    for (int k = 1; k < 400; ++k) {
      term *= 2.0 * x / (2.0 * m + 2.0 * k + 1.0);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return std::exp(-x) * sum;
  }
  // asymptotic region: erf(sqrt(x)) = 1 to machine precision at x >= 35,
  // and the upward recurrence is stable because 2x dominates 2m+1
  double f = 0.5 * std::sqrt(pi / x) * std::erf(std::sqrt(x));
  const double ex = std::exp(-x);
  for (int k = 0; k < m; ++k) f = ((2.0 * k + 1.0) * f - ex) / (2.0 * x);
  return f;
}

namespace {

struct PrimitivePair {
  double p;       // combined exponent
  double kab;     // Gaussian product prefactor exp(-mu R^2)
  double weight;  // product of contraction weights
  Vec3 center;    // Gaussian product center
};

std::vector<PrimitivePair> pair_list(const ContractedGaussian& a,
                                     const ContractedGaussian& b) {
  std::vector<PrimitivePair> out;
  out.reserve(a.exponents.size() * b.exponents.size());
  const double r2 = distance(a.center, b.center) * distance(a.center, b.center);
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    for (std::size_t j = 0; j < b.exponents.size(); ++j) {
      PrimitivePair pp;
      const double ea = a.exponents[i], eb = b.exponents[j];
      pp.p = ea + eb;
      pp.kab = std::exp(-ea * eb / pp.p * r2);
      pp.weight = a.coefficients[i] * b.coefficients[j];
      for (int d = 0; d < 3; ++d)
        pp.center[d] = (ea * a.center[d] + eb * b.center[d]) / pp.p;
      out.push_back(pp);
    }
  return out;
}

}  // namespace

IntegralTables compute_integrals(const Geometry& geom,
                                 const std::vector<ContractedGaussian>& basis) {
  const std::size_t n = basis.size();
  if (geom.size() != n)
    throw std::invalid_argument("compute_integrals: one s-function per center expected");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (distance(geom.centers[a], geom.centers[b]) < 1e-10)
        throw std::invalid_argument("compute_integrals: coincident centers");

  constexpr double pi = std::numbers::pi;
  IntegralTables t;
  t.S = Matrix(n, n);
  t.Tkin = Matrix(n, n);
  t.Vnuc = Matrix(n, n);
  t.eri = Tensor4(n);

  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = A; B < n; ++B) {
      const double r2 = std::pow(distance(basis[A].center, basis[B].center), 2);
      double s = 0.0, kin = 0.0, vn = 0.0;
      for (const auto& pp : pair_list(basis[A], basis[B])) {
        const double base = pp.weight * std::pow(pi / pp.p, 1.5) * pp.kab;
        s += base;
        // reconstruct mu = ea*eb/p from the pair via kab? keep it direct instead
        (void)0;
      }
      // kinetic and nuclear need the primitive exponents; redo explicit loops
      s = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const double ea = basis[A].exponents[i], eb = basis[B].exponents[j];
          const double w = basis[A].coefficients[i] * basis[B].coefficients[j];
          const double p = ea + eb, mu = ea * eb / p;
          const double kab = std::exp(-mu * r2);
          const double ovl = w * std::pow(pi / p, 1.5) * kab;
          s += ovl;
          kin += mu * (3.0 - 2.0 * mu * r2) * ovl;
          Vec3 P;
          for (int d = 0; d < 3; ++d)
            P[d] = (ea * basis[A].center[d] + eb * basis[B].center[d]) / p;
          for (std::size_t C = 0; C < geom.size(); ++C) {
            const double rpc2 = std::pow(distance(P, geom.centers[C]), 2);
            vn -= geom.charges[C] * w * 2.0 * pi / p * kab * boys(0, p * rpc2);
          }
        }
      t.S(A, B) = t.S(B, A) = s;
      t.Tkin(A, B) = t.Tkin(B, A) = kin;
      t.Vnuc(A, B) = t.Vnuc(B, A) = vn;
    }

  // one canonical evaluation per 8-fold-equivalent ERI class
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B <= A; ++B)
      for (std::size_t C = 0; C <= A; ++C)
        for (std::size_t D = 0; D <= (C == A ? B : C); ++D) {
          const auto ab = pair_list(basis[A], basis[B]);
          const auto cd = pair_list(basis[C], basis[D]);
          double val = 0.0;
          for (const auto& p1 : ab)
            for (const auto& p2 : cd) {
              const double rpq2 = std::pow(distance(p1.center, p2.center), 2);
              const double rho = p1.p * p2.p / (p1.p + p2.p);
              val += p1.weight * p2.weight * 2.0 * std::pow(pi, 2.5) /
                     (p1.p * p2.p * std::sqrt(p1.p + p2.p)) * p1.kab * p2.kab *
                     boys(0, rho * rpq2);
            }
          t.eri(A, B, C, D) = t.eri(B, A, C, D) = t.eri(A, B, D, C) =
              t.eri(B, A, D, C) = t.eri(C, D, A, B) = t.eri(D, C, A, B) =
                  t.eri(C, D, B, A) = t.eri(D, C, B, A) = val;
        }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      t.e_nn += geom.charges[a] * geom.charges[b] /
                distance(geom.centers[a], geom.centers[b]);
  return t;
}

}  // namespace mbtk
