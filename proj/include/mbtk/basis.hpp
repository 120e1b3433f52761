#pragma once
#include <vector>

#include "mbtk/geometry.hpp"

namespace mbtk {

/// Contraction of normalized s-type Gaussian primitives on one center.
struct ContractedGaussian {
  Vec3 center;
  std::vector<double> exponents;
  std::vector<double> coefficients;  // weights including primitive norms
};

/// One STO-3G s-function per center. Contractions are renormalized so the
/// self-overlap is exactly 1.
std::vector<ContractedGaussian> sto3g_hydrogen_basis(const Geometry& geom);

}  // namespace mbtk
