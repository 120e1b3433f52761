#pragma once
#include <vector>

#include "mbtk/basis.hpp"
#include "mbtk/geometry.hpp"
#include "mbtk/matrix.hpp"

namespace mbtk {

/// Flat four-index tensor with equal extents.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), a_(n * n * n * n, 0.0) {}

  std::size_t extent() const { return n_; }
  double& operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return a_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return a_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// AO-basis integrals. ERI is stored in chemists' notation (pq|rs).
struct IntegralTables {
  Matrix S;
  Matrix Tkin;
  Matrix Vnuc;
  Tensor4 eri;
  double e_nn = 0.0;
};

/// Boys function F_m(x) = int_0^1 t^{2m} exp(-x t^2) dt, accurate to 1e-12.
double boys(int m, double x);

IntegralTables compute_integrals(const Geometry& geom,
                                 const std::vector<ContractedGaussian>& basis);

}  // namespace mbtk
