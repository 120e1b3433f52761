#include "mbtk/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace mbtk {

Geometry build_chain(int n_atoms, double spacing) {
  if (n_atoms < 2) throw std::invalid_argument("build_chain: need at least 2 atoms");
  if (!(spacing > 0.0)) throw std::invalid_argument("build_chain: spacing must be positive");
  Geometry g;
  g.centers.reserve(n_atoms);
  for (int k = 0; k < n_atoms; ++k) {
    g.centers.push_back({0.0, 0.0, k * spacing});
    g.charges.push_back(1.0);
  }
  return g;
}

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace mbtk
