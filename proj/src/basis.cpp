#include "mbtk/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mbtk {

namespace {
// Standard STO-3G hydrogen s-shell.
constexpr double kExp[3] = {3.42525091, 0.62391373, 0.16885540};
constexpr double kCoef[3] = {0.15432897, 0.53532814, 0.44463454};
}  // namespace

std::vector<ContractedGaussian> sto3g_hydrogen_basis(const Geometry& geom) {
  const double pi = std::numbers::pi;
  // fold primitive norms into the weights, then renormalize the contraction
  double c[3];
  for (int i = 0; i < 3; ++i) c[i] = kCoef[i] * std::pow(2.0 * kExp[i] / pi, 0.75);
  double self = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      self += c[i] * c[j] * std::pow(pi / (kExp[i] + kExp[j]), 1.5);
  const double scale = 1.0 / std::sqrt(self);

  std::vector<ContractedGaussian> basis;
  basis.reserve(geom.size());
  for (const auto& r : geom.centers) {
    ContractedGaussian g;
    g.center = r;
    g.exponents.assign(kExp, kExp + 3);
    for (int i = 0; i < 3; ++i) g.coefficients.push_back(c[i] * scale);
    basis.push_back(std::move(g));
  }
  return basis;
}

}  // namespace mbtk
